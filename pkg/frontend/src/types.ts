// Element tree mirroring the backend's AST JSON. The client edits this
// tree and serializes it to layout text; it never parses or renders
// layouts itself.

export interface RowNode {
  kind: 'row';
  children: ElementNode[];
}

export interface ColumnNode {
  kind: 'column';
  children: ElementNode[];
}

export interface LabelNode {
  kind: 'label';
  value: string;
}

export interface InputNode {
  kind: 'input';
  placeholder: string | null;
}

export type ElementNode = RowNode | ColumnNode | LabelNode | InputNode;
export type ElementKind = ElementNode['kind'];

export interface LayoutTree {
  title: string;
  body: ElementNode[];
}

/** Child-index path from the document body down to an element. */
export type Path = number[];

export function isContainer(node: ElementNode): node is RowNode | ColumnNode {
  return node.kind === 'row' || node.kind === 'column';
}

// --- API wire shapes --------------------------------------------------------

export interface SpanJson {
  start: number;
  end: number;
}

export interface FindingJson {
  rule: string;
  severity: 'error' | 'warning';
  message: string;
  element_id: string | null;
}

export interface LintJson {
  findings: FindingJson[];
  clean: boolean;
}

export interface ParseErrorJson {
  code: string;
  message: string;
  span: SpanJson;
}

export interface RenderResponse {
  html: string;
  element_index: Record<string, string>;
}

export interface ValidateResponse {
  valid: boolean;
  error: ParseErrorJson | null;
  lint: LintJson | null;
  ast: { title: string; body: ElementNode[] } | { elements: ElementNode[] } | null;
  canonical: string | null;
}

export interface GenerateResponse {
  mode: 'interface' | 'component';
  dsl: string;
  ast: { title: string; body: ElementNode[] } | { elements: ElementNode[] };
  html: string;
  element_index: Record<string, string>;
  lint: LintJson;
  attempts: number;
}

export interface ComponentRecord {
  id: string;
  name: string;
  description: string;
  dsl: string;
  tags: string[];
  created_at: string;
}

export interface ApiErrorBody {
  code: string;
  message: string;
  span?: SpanJson;
  findings?: unknown[];
}
