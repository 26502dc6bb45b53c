// Latest-wins gate for in-flight requests. Every navigation bumps the
// generation; a response may only commit if its generation is still the
// newest, so a slow stale response can never overwrite a newer view.

export class LatestWins {
  private generation = 0;

  /** Invalidate everything in flight (e.g. before an imperative reset). */
  invalidate(): void {
    this.generation += 1;
  }

  async run<T>(
    task: () => Promise<T>,
    commit: (value: T) => void,
    fail: (error: unknown) => void,
  ): Promise<void> {
    this.generation += 1;
    const mine = this.generation;
    try {
      const value = await task();
      if (mine === this.generation) {
        commit(value);
      }
    } catch (error) {
      if (mine === this.generation) {
        fail(error);
      }
    }
  }
}
