/** Subprocess plumbing: write the graph file, run the CLI, parse its JSON. */

import { spawnSync } from 'node:child_process'
import { mkdtempSync, rmSync, writeFileSync } from 'node:fs'
import { tmpdir } from 'node:os'
import { join } from 'node:path'

import { BudgetError, CliError, ValidationError } from './errors.js'
import type { BoundGraph } from './graph.js'

/**
 * Command used to invoke the backing CLI. Override with the IRAUG_CLI
 * environment variable, e.g. "python3 -m iraug" (the default) or a path to
 * an installed `iraug` executable.
 */
export function cliCommand(): string[] {
  const raw = process.env.IRAUG_CLI ?? 'python3 -m iraug'
  return raw.split(' ').filter((part) => part.length > 0)
}

export function runCli(args: string[]): string {
  const [command, ...prefix] = cliCommand()
  const proc = spawnSync(command, [...prefix, ...args], {
    encoding: 'utf8',
    maxBuffer: 1 << 28,
  })
  if (proc.error) {
    throw new CliError(`failed to launch ${command}: ${proc.error.message}`, null)
  }
  if (proc.status !== 0) {
    const message = proc.stderr.trim() || `exit code ${proc.status}`
    if (proc.status === 2) throw new ValidationError(message)
    if (proc.status === 3) throw new BudgetError(message)
    throw new CliError(message, proc.status)
  }
  return proc.stdout
}

/** Run `fn` with the graph serialized to a temporary file. */
export function withGraphFile<T>(graph: BoundGraph, fn: (path: string) => T): T {
  const dir = mkdtempSync(join(tmpdir(), 'iraug-'))
  const path = join(dir, 'graph.graph')
  try {
    writeFileSync(path, graph.toFileText(), 'ascii')
    return fn(path)
  } finally {
    rmSync(dir, { recursive: true, force: true })
  }
}
