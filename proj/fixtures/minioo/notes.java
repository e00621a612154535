/*
 * Corpus notes: this unit intentionally declares no classes; it checks
 * that comment-only files parse cleanly.
 */
