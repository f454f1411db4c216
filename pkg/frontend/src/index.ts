/**
 * Typed-array client for the graph augmentation CLI.
 *
 * Both entry points accept an m x 2 edge array plus a per-vertex color
 * array, shell out to the CLI, and return the parsed results as native
 * numeric arrays. Outputs are bit-identical to the CLI JSON for the
 * indicator methods and round-trip exact for noise features, under the
 * same seed.
 */

import { runCli, withGraphFile } from './cli.js'
import { BoundGraph, type EdgeInput } from './graph.js'

export { BoundGraph } from './graph.js'
export type { EdgeInput } from './graph.js'
export { BudgetError, CliError, ValidationError } from './errors.js'

export const VERSION = '0.1.0'
/** Identifier of the deterministic seed-derivation scheme the backend uses. */
export const SEED_SCHEME = 'blake2b64-v1'

export type AugmentMethod = 'irni' | 'rni' | 'clip' | 'rp'
export type Refinement = 'cref' | 'tref' | 'oref' | 'ctref'
export type Selector = 'first-largest' | 'planar'

export interface AugmentOptions {
  method: AugmentMethod
  /** Added dimensions for irni/rni; ignored by clip and rp. */
  d?: number
  /** Number of independent samples (ensembling over randomness). */
  e?: number
  seed: number
  refinement?: Refinement
  selector?: Selector
}

export interface AugmentResult {
  method: AugmentMethod
  n: number
  /** Appended feature width (equals d for irni/rni). */
  width: number
  e: number
  seed: number
  /** Contiguous features of shape [e, n, width], sample-major. */
  data: Float64Array
  shape: readonly [number, number, number]
  /** Walk prefix (irni/rp) or per-vertex cell indices (clip) per sample. */
  walks: ReadonlyArray<ReadonlyArray<number>>
  /** Zero-copy view of one sample's n x width block. */
  sample(index: number): Float64Array
}

export interface WalkOptions {
  d: number
  seed: number
  refinement?: Refinement
  selector?: Selector
}

export interface WalkResult {
  walk: ReadonlyArray<number>
  filledPrefix: ReadonlyArray<number>
  naturalLength: number
  leafColoring: ReadonlyArray<number>
}

interface AugmentDocument {
  n: number
  method: AugmentMethod
  d: number
  seed: number
  samples: Array<{ walk: number[]; features: number[][] }>
}

/** Draw augmentation samples; features come back as one contiguous block. */
export function augment(
  edges: EdgeInput,
  colors: ReadonlyArray<number> | Int32Array,
  options: AugmentOptions,
): AugmentResult {
  const graph = new BoundGraph(edges, colors)
  const e = options.e ?? 1
  const doc = withGraphFile(graph, (path) => {
    const args = [
      'augment',
      '--in', path,
      '--method', options.method,
      '--d', String(options.d ?? 1),
      '--samples', String(e),
      '--seed', String(options.seed),
    ]
    if (options.refinement) args.push('--refinement', options.refinement)
    if (options.selector) args.push('--selector', options.selector)
    return JSON.parse(runCli(args)) as AugmentDocument
  })
  const width = doc.d
  const n = doc.n
  const data = new Float64Array(e * n * width)
  const walks: number[][] = []
  doc.samples.forEach((sample, s) => {
    walks.push(sample.walk)
    sample.features.forEach((row, v) => {
      for (let j = 0; j < width; j++) {
        data[s * n * width + v * width + j] = row[j]
      }
    })
  })
  return {
    method: doc.method,
    n,
    width,
    e,
    seed: doc.seed,
    data,
    shape: [e, n, width] as const,
    walks,
    sample: (index: number) => data.subarray(index * n * width, (index + 1) * n * width),
  }
}

/** Run one random walk and return it with its (relabeled) leaf coloring. */
export function walk(
  edges: EdgeInput,
  colors: ReadonlyArray<number> | Int32Array,
  options: WalkOptions,
): WalkResult {
  const graph = new BoundGraph(edges, colors)
  const doc = withGraphFile(graph, (path) => {
    const args = [
      'walk',
      '--in', path,
      '--d', String(options.d),
      '--seed', String(options.seed),
    ]
    if (options.refinement) args.push('--refinement', options.refinement)
    if (options.selector) args.push('--selector', options.selector)
    return JSON.parse(runCli(args)) as {
      walk: number[]
      filled_prefix: number[]
      natural_length: number
      leaf_coloring: number[]
    }
  })
  return {
    walk: doc.walk,
    filledPrefix: doc.filled_prefix,
    naturalLength: doc.natural_length,
    leafColoring: doc.leaf_coloring,
  }
}
