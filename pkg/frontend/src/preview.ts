import { ApiClient } from './api.js';

/**
 * Keeps an isolated preview frame in sync with the canvas. All markup
 * comes from the backend renderer; the frame gets a whole srcdoc per
 * update so nothing accumulates. Requests are debounced and stale
 * responses are dropped.
 */
export class PreviewController {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private generation = 0;

  constructor(
    private readonly api: ApiClient,
    private readonly apply: (html: string) => void,
    private readonly onError: (message: string) => void,
    private readonly debounceMs = 200,
  ) {}

  /** Schedule a preview refresh for the given layout text. */
  refresh(dsl: string): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
    }
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.fetchNow(dsl);
    }, this.debounceMs);
  }

  /** Immediate refresh; returns the html so callers can reuse it. */
  async fetchNow(dsl: string): Promise<string | null> {
    const ticket = ++this.generation;
    try {
      const response = await this.api.render(dsl);
      if (ticket === this.generation) {
        this.apply(response.html);
      }
      return response.html;
    } catch (error) {
      if (ticket === this.generation) {
        this.onError(error instanceof Error ? error.message : String(error));
      }
      return null;
    }
  }
}

export function frameDocument(html: string): string {
  return [
    '<!doctype html><html><head><style>',
    'body { font-family: system-ui, sans-serif; margin: 1rem; }',
    '.tutor { border: 1px solid #cbd5e1; border-radius: 8px; padding: 1rem; }',
    '.tutor-title { margin-top: 0; }',
    '.tutor-row { display: flex; gap: 0.5rem; align-items: center; margin: 0.5rem 0; }',
    '.tutor-column { display: flex; flex-direction: column; gap: 0.5rem; margin: 0.5rem 0; }',
    '.tutor-input { padding: 0.3rem 0.5rem; border: 1px solid #94a3b8; border-radius: 4px; }',
    '</style></head><body>',
    html,
    '</body></html>',
  ].join('');
}
