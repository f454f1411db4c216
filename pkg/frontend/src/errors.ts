/** Error types mirroring the CLI's exit-code contract. */

/** Invalid arguments or input data (CLI exit code 2, or local validation). */
export class ValidationError extends Error {
  constructor(message: string) {
    super(message)
    this.name = 'ValidationError'
  }
}

/** Search-tree node budget exceeded (CLI exit code 3). */
export class BudgetError extends Error {
  constructor(message: string) {
    super(message)
    this.name = 'BudgetError'
  }
}

/** Any other CLI failure, with the captured stderr. */
export class CliError extends Error {
  constructor(message: string, readonly exitCode: number | null) {
    super(message)
    this.name = 'CliError'
  }
}
