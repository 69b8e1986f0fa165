import { serializeLayout } from './serialize.js';
import { ElementKind, ElementNode, LayoutTree, Path, isContainer } from './types.js';

// Containers nested deeper than this fail to parse on the backend, so
// the canvas refuses edits that would cross it.
const MAX_DEPTH = 8;

const DEFAULT_LABEL = 'New label';

function clone<T>(value: T): T {
  return structuredClone(value);
}

function pathsEqual(a: Path, b: Path): boolean {
  return a.length === b.length && a.every((step, i) => step === b[i]);
}

function isPrefix(prefix: Path, path: Path): boolean {
  return prefix.length <= path.length && prefix.every((step, i) => step === path[i]);
}

function subtreeDepth(node: ElementNode): number {
  if (!isContainer(node)) {
    return 0;
  }
  let deepest = 0;
  for (const child of node.children) {
    deepest = Math.max(deepest, subtreeDepth(child));
  }
  return 1 + deepest;
}

function makeElement(kind: ElementKind): ElementNode {
  switch (kind) {
    case 'row':
      return { kind: 'row', children: [] };
    case 'column':
      return { kind: 'column', children: [] };
    case 'label':
      return { kind: 'label', value: DEFAULT_LABEL };
    case 'input':
      return { kind: 'input', placeholder: null };
  }
}

/**
 * Client-side layout state: the element tree, the selection, and
 * snapshot-based undo/redo. Every mutating method either applies a
 * valid edit (returning true) or rejects it leaving state untouched
 * (returning false), so the tree always serializes to layout text the
 * backend parses.
 */
export class CanvasState {
  private layout: LayoutTree;
  private undoStack: LayoutTree[] = [];
  private redoStack: LayoutTree[] = [];
  public selection: Path | null = null;
  public dirty = false;

  constructor(layout?: LayoutTree) {
    this.layout = layout ? clone(layout) : { title: 'Untitled tutor', body: [] };
  }

  get tree(): LayoutTree {
    return this.layout;
  }

  get title(): string {
    return this.layout.title;
  }

  get canUndo(): boolean {
    return this.undoStack.length > 0;
  }

  get canRedo(): boolean {
    return this.redoStack.length > 0;
  }

  serialize(): string {
    return serializeLayout(this.layout);
  }

  nodeAt(path: Path): ElementNode | null {
    let list = this.layout.body;
    let node: ElementNode | null = null;
    for (const index of path) {
      const candidate: ElementNode | undefined = list[index];
      if (candidate === undefined) {
        return null;
      }
      node = candidate;
      list = isContainer(candidate) ? candidate.children : [];
    }
    return node;
  }

  /** Replace everything with a generated draft; history starts over. */
  replaceLayout(layout: LayoutTree): void {
    this.layout = clone(layout);
    this.undoStack = [];
    this.redoStack = [];
    this.selection = null;
    this.dirty = false;
  }

  private checkpoint(): void {
    this.undoStack.push(clone(this.layout));
    this.redoStack = [];
    this.dirty = true;
  }

  undo(): boolean {
    const previous = this.undoStack.pop();
    if (!previous) {
      return false;
    }
    this.redoStack.push(clone(this.layout));
    this.layout = previous;
    this.selection = null;
    return true;
  }

  redo(): boolean {
    const next = this.redoStack.pop();
    if (!next) {
      return false;
    }
    this.undoStack.push(clone(this.layout));
    this.layout = next;
    this.selection = null;
    return true;
  }

  private listAt(parent: Path | null): ElementNode[] | null {
    if (parent === null || parent.length === 0) {
      return this.layout.body;
    }
    const node = this.nodeAt(parent);
    return node && isContainer(node) ? node.children : null;
  }

  /** Add a fresh element; parent null means the document body. */
  addElement(kind: ElementKind, parent: Path | null, index?: number): boolean {
    const siblings = this.listAt(parent);
    if (siblings === null) {
      return false; // leaves cannot take children
    }
    const parentDepth = parent ? parent.length : 0;
    if ((kind === 'row' || kind === 'column') && parentDepth + 1 > MAX_DEPTH) {
      return false;
    }
    this.checkpoint();
    const position = index === undefined ? siblings.length : index;
    siblings.splice(position, 0, makeElement(kind));
    return true;
  }

  deleteElement(path: Path): boolean {
    if (path.length === 0) {
      return false;
    }
    const parentList = this.listAt(path.slice(0, -1));
    const index = path[path.length - 1]!;
    if (parentList === null || parentList[index] === undefined) {
      return false;
    }
    this.checkpoint();
    parentList.splice(index, 1);
    if (this.selection && isPrefix(path, this.selection)) {
      this.selection = null;
    }
    return true;
  }

  moveElement(from: Path, toParent: Path | null, index: number): boolean {
    const node = this.nodeAt(from);
    if (!node || from.length === 0) {
      return false;
    }
    if (toParent && (pathsEqual(from, toParent) || isPrefix(from, toParent))) {
      return false; // cannot move a node into itself or its own subtree
    }
    const targetList = this.listAt(toParent);
    if (targetList === null) {
      return false;
    }
    const targetDepth = toParent ? toParent.length : 0;
    if (targetDepth + subtreeDepth(node) > MAX_DEPTH) {
      return false;
    }
    this.checkpoint();
    const fromList = this.listAt(from.slice(0, -1))!;
    const fromIndex = from[from.length - 1]!;
    const [moved] = fromList.splice(fromIndex, 1);
    // removing the node may shift the target position within the same list
    let insertAt = index;
    if (fromList === targetList && fromIndex < index) {
      insertAt -= 1;
    }
    targetList.splice(insertAt, 0, moved!);
    this.selection = null;
    return true;
  }

  /** Rename a label, retitle the document, or set a placeholder. */
  renameElement(path: Path, value: string): boolean {
    const node = this.nodeAt(path);
    if (!node) {
      return false;
    }
    if (node.kind === 'label') {
      if (!value.trim()) {
        return false; // blank labels do not parse
      }
      this.checkpoint();
      node.value = value;
      return true;
    }
    if (node.kind === 'input') {
      this.checkpoint();
      node.placeholder = value === '' ? null : value;
      return true;
    }
    return false;
  }

  /** The title is required; blanking it is blocked. */
  setTitle(value: string): boolean {
    if (!value.trim()) {
      return false;
    }
    this.checkpoint();
    this.layout.title = value;
    return true;
  }

  /**
   * Splice a component's elements at the selection: into a selected
   * container, after a selected leaf, or at the document end when
   * nothing is selected.
   */
  insertFragment(elements: ElementNode[]): boolean {
    if (elements.length === 0) {
      return false;
    }
    let targetList: ElementNode[];
    let position: number;
    const selected = this.selection ? this.nodeAt(this.selection) : null;
    if (this.selection && selected && isContainer(selected)) {
      targetList = selected.children;
      position = targetList.length;
      const depth = this.selection.length;
      if (elements.some((node) => depth + subtreeDepth(node) > MAX_DEPTH)) {
        return false;
      }
    } else if (this.selection && selected) {
      const parent = this.selection.slice(0, -1);
      targetList = this.listAt(parent)!;
      position = this.selection[this.selection.length - 1]! + 1;
      const depth = parent.length;
      if (elements.some((node) => depth + subtreeDepth(node) > MAX_DEPTH)) {
        return false;
      }
    } else {
      targetList = this.layout.body;
      position = targetList.length;
      if (elements.some((node) => subtreeDepth(node) > MAX_DEPTH)) {
        return false;
      }
    }
    this.checkpoint();
    targetList.splice(position, 0, ...elements.map((node) => clone(node)));
    return true;
  }

  select(path: Path | null): void {
    this.selection = path && this.nodeAt(path) ? path : null;
  }
}
