/** Request sequence numbers so out-of-order responses are dropped, never rendered. */

export class RequestSequencer {
  private nextSeq = 0;
  private deliveredSeq = -1;

  /** Tag an outgoing request. */
  issue(): number {
    return this.nextSeq++;
  }

  /** True iff this response is newer than everything rendered so far. */
  accept(seq: number): boolean {
    if (seq <= this.deliveredSeq) return false;
    this.deliveredSeq = seq;
    return true;
  }
}
