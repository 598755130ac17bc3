// Copy-button arming: a paste is attributed to a prompt only when it follows
// that card's copy button. Arming is one-shot and expires after 60 seconds;
// any other paste is a plain human insert.

export const ARM_TTL_MS = 60_000;

export interface CopyArm {
  promptId: string;
  armedAt: number;
}

export function armCopy(promptId: string, now: number): CopyArm {
  return { promptId, armedAt: now };
}

/**
 * Consume the arm for a paste happening at `now`. Returns the prompt id the
 * paste should be attributed to, or null for a plain human paste. The arm is
 * spent either way (one-shot).
 */
export function consumePaste(arm: CopyArm | null, now: number): string | null {
  if (arm === null) return null;
  if (now - arm.armedAt > ARM_TTL_MS) return null;
  return arm.promptId;
}
