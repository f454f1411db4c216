/** Graph handle: validates edge/color arrays and serializes the file format. */

import { ValidationError } from './errors.js'

export type EdgeInput = ReadonlyArray<readonly [number, number]> | Int32Array | Uint32Array

/**
 * An immutable graph built from an m x 2 edge array and a per-vertex color
 * array. Vertices are 1..n with n = colors.length; validation mirrors the
 * backing library (no self-loops, no duplicate edges, endpoints in range).
 */
export class BoundGraph {
  readonly n: number
  readonly edges: ReadonlyArray<readonly [number, number]>
  readonly colors: ReadonlyArray<number>

  constructor(edges: EdgeInput, colors: ReadonlyArray<number> | Int32Array) {
    const cols = Array.from(colors, (c) => {
      if (!Number.isInteger(c) || c < 0) {
        throw new ValidationError(`vertex colors must be natural numbers, got ${c}`)
      }
      return c
    })
    if (cols.length < 1) {
      throw new ValidationError('at least one vertex is required')
    }
    this.n = cols.length
    this.colors = cols
    this.edges = normalizeEdges(edges, this.n)
  }

  /** Serialize to the one-graph text format the CLI consumes. */
  toFileText(): string {
    const lines = [`p ${this.n} ${this.edges.length} 0`]
    for (let v = 1; v <= this.n; v++) {
      lines.push(`v ${v} ${this.colors[v - 1]} 0`)
    }
    for (const [u, v] of this.edges) {
      lines.push(`e ${u} ${v}`)
    }
    return lines.join('\n') + '\n'
  }
}

function normalizeEdges(edges: EdgeInput, n: number): Array<readonly [number, number]> {
  let pairs: Array<[number, number]>
  if (edges instanceof Int32Array || edges instanceof Uint32Array) {
    if (edges.length % 2 !== 0) {
      throw new ValidationError('flat edge array must have even length')
    }
    pairs = []
    for (let i = 0; i < edges.length; i += 2) {
      pairs.push([edges[i], edges[i + 1]])
    }
  } else {
    pairs = edges.map(([u, v]) => [u, v])
  }
  const seen = new Set<number>()
  const out: Array<[number, number]> = []
  for (const [a, b] of pairs) {
    if (!Number.isInteger(a) || !Number.isInteger(b) || a < 1 || b < 1 || a > n || b > n) {
      throw new ValidationError(`edge (${a}, ${b}) has an endpoint outside 1..${n}`)
    }
    if (a === b) {
      throw new ValidationError(`self-loop at vertex ${a}`)
    }
    const u = Math.min(a, b)
    const v = Math.max(a, b)
    const key = u * (n + 1) + v
    if (seen.has(key)) {
      throw new ValidationError(`duplicate edge (${u}, ${v})`)
    }
    seen.add(key)
    out.push([u, v])
  }
  out.sort((x, y) => (x[0] - y[0]) || (x[1] - y[1]))
  return out
}
