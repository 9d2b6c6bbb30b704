/** Serializes judgment writes: at most one in flight, FIFO order. */

export class WriteQueue {
  private tail: Promise<unknown> = Promise.resolve();
  private depth = 0;

  /** Number of tasks queued or running. */
  get pending(): number {
    return this.depth;
  }

  push<T>(task: () => Promise<T>): Promise<T> {
    this.depth += 1;
    const run = () =>
      task().finally(() => {
        this.depth -= 1;
      });
    // run regardless of whether the previous write failed
    const next = this.tail.then(run, run);
    this.tail = next.catch(() => undefined);
    return next;
  }
}
