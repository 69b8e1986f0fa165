import { ApiClient, ApiRequestError } from './api.js';
import { CanvasState } from './canvas.js';
import { PreviewController, frameDocument } from './preview.js';
import { ComponentRecord, ElementKind, ElementNode, Path, isContainer } from './types.js';

declare global {
  interface Window {
    TUTORKIT_API_BASE?: string;
  }
}

const API_BASE = window.TUTORKIT_API_BASE ?? 'http://127.0.0.1:8300';
const PALETTE: ElementKind[] = ['row', 'column', 'label', 'input'];

const api = new ApiClient(API_BASE);
const canvas = new CanvasState();

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) {
    throw new Error(`missing element #${id}`);
  }
  return found as T;
}

const banner = el<HTMLDivElement>('error-banner');
const treeHost = el<HTMLDivElement>('canvas-tree');
const titleInput = el<HTMLInputElement>('title-input');
const dslView = el<HTMLTextAreaElement>('dsl-view');
const previewFrame = el<HTMLIFrameElement>('preview-frame');
const generateButton = el<HTMLButtonElement>('generate-button');
const componentGenerateButton = el<HTMLButtonElement>('component-generate-button');
const componentSaveButton = el<HTMLButtonElement>('component-save-button');
const componentListHost = el<HTMLDivElement>('component-list');
const undoButton = el<HTMLButtonElement>('undo-button');
const redoButton = el<HTMLButtonElement>('redo-button');

const preview = new PreviewController(
  api,
  (html) => {
    previewFrame.srcdoc = frameDocument(html);
  },
  (message) => showError(message),
);

let pendingComponent: { dsl: string; elements: ElementNode[] } | null = null;

function showError(message: string): void {
  banner.textContent = message;
  banner.hidden = false;
}

function clearError(): void {
  banner.hidden = true;
}

function describeApiError(error: unknown): string {
  if (error instanceof ApiRequestError) {
    const span = error.body.span ? ` at ${error.body.span.start}..${error.body.span.end}` : '';
    return `${error.body.code}${span}: ${error.body.message}`;
  }
  return error instanceof Error ? error.message : String(error);
}

// --- canvas tree rendering ---------------------------------------------------

function nodeCaption(node: ElementNode): string {
  switch (node.kind) {
    case 'row':
      return 'row';
    case 'column':
      return 'column';
    case 'label':
      return `label: ${node.value}`;
    case 'input':
      return node.placeholder ? `input: ${node.placeholder}` : 'input';
  }
}

function renderNode(node: ElementNode, path: Path): HTMLElement {
  const item = document.createElement('div');
  item.className = `node node-${node.kind}`;
  if (canvas.selection && JSON.stringify(canvas.selection) === JSON.stringify(path)) {
    item.classList.add('selected');
  }
  item.draggable = true;

  const caption = document.createElement('span');
  caption.className = 'caption';
  caption.textContent = nodeCaption(node);
  item.appendChild(caption);

  const remove = document.createElement('button');
  remove.className = 'remove';
  remove.textContent = 'x';
  remove.title = 'Delete element';
  remove.addEventListener('click', (event) => {
    event.stopPropagation();
    canvas.deleteElement(path);
    refresh();
  });
  item.appendChild(remove);

  item.addEventListener('click', (event) => {
    event.stopPropagation();
    canvas.select(path);
    refresh(false);
  });

  item.addEventListener('dblclick', (event) => {
    event.stopPropagation();
    if (node.kind === 'label' || node.kind === 'input') {
      const current = node.kind === 'label' ? node.value : (node.placeholder ?? '');
      const next = prompt(
        node.kind === 'label' ? 'Label text' : 'Input placeholder (empty for none)',
        current,
      );
      if (next !== null && !canvas.renameElement(path, next)) {
        showError('Labels need non-blank text.');
        return;
      }
      refresh();
    }
  });

  item.addEventListener('dragstart', (event) => {
    event.stopPropagation();
    event.dataTransfer?.setData('application/x-move', JSON.stringify(path));
  });

  if (isContainer(node)) {
    const children = document.createElement('div');
    children.className = 'children';
    node.children.forEach((child, index) => {
      children.appendChild(renderNode(child, [...path, index]));
    });
    item.appendChild(children);
    attachDropTarget(item, path);
  }
  return item;
}

function attachDropTarget(target: HTMLElement, parent: Path | null): void {
  target.addEventListener('dragover', (event) => {
    event.preventDefault();
    event.stopPropagation();
    target.classList.add('drop-ok');
  });
  target.addEventListener('dragleave', () => target.classList.remove('drop-ok'));
  target.addEventListener('drop', (event) => {
    event.preventDefault();
    event.stopPropagation();
    target.classList.remove('drop-ok');
    const paletteKind = event.dataTransfer?.getData('application/x-palette');
    const movePath = event.dataTransfer?.getData('application/x-move');
    let accepted = false;
    if (paletteKind) {
      accepted = canvas.addElement(paletteKind as ElementKind, parent);
    } else if (movePath) {
      const from = JSON.parse(movePath) as Path;
      const index = parent === null ? canvas.tree.body.length : containerSize(parent);
      accepted = canvas.moveElement(from, parent, index);
    }
    if (!accepted) {
      showError('That element cannot be dropped there.');
      return;
    }
    refresh();
  });
}

function containerSize(parent: Path): number {
  const node = canvas.nodeAt(parent);
  return node && isContainer(node) ? node.children.length : 0;
}

function refresh(redraw = true): void {
  clearError();
  if (redraw) {
    const dsl = canvas.serialize();
    dslView.value = dsl;
    preview.refresh(dsl);
  }
  titleInput.value = canvas.title;
  undoButton.disabled = !canvas.canUndo;
  redoButton.disabled = !canvas.canRedo;
  treeHost.replaceChildren();
  canvas.tree.body.forEach((node, index) => {
    treeHost.appendChild(renderNode(node, [index]));
  });
}

// --- top-level wiring --------------------------------------------------------

function wirePalette(): void {
  const host = el<HTMLDivElement>('palette');
  for (const kind of PALETTE) {
    const chip = document.createElement('button');
    chip.className = 'palette-chip';
    chip.textContent = kind;
    chip.draggable = true;
    chip.addEventListener('dragstart', (event) => {
      event.dataTransfer?.setData('application/x-palette', kind);
    });
    chip.addEventListener('click', () => {
      if (!canvas.addElement(kind, canvas.selection)) {
        showError('That element cannot go there.');
        return;
      }
      refresh();
    });
    host.appendChild(chip);
  }
  attachDropTarget(treeHost, null);
}

function wireChrome(): void {
  titleInput.addEventListener('change', () => {
    if (!canvas.setTitle(titleInput.value)) {
      showError('Documents need a non-blank title.');
      titleInput.value = canvas.title;
      return;
    }
    refresh();
  });
  undoButton.addEventListener('click', () => {
    canvas.undo();
    refresh();
  });
  redoButton.addEventListener('click', () => {
    canvas.redo();
    refresh();
  });
}

function wireGenerate(): void {
  generateButton.addEventListener('click', async () => {
    const description = el<HTMLTextAreaElement>('description-input').value;
    if (!description.trim()) {
      showError('Describe the tutor first.');
      return;
    }
    generateButton.disabled = true; // one in-flight generation at a time
    try {
      const result = await api.generateInterface(description);
      canvas.replaceLayout(result.ast as { title: string; body: ElementNode[] });
      previewFrame.srcdoc = frameDocument(result.html);
      dslView.value = result.dsl;
      refresh(false);
    } catch (error) {
      showError(describeApiError(error));
    } finally {
      generateButton.disabled = false;
    }
  });
}

async function renderComponentList(): Promise<void> {
  const { components } = await api.listComponents();
  componentListHost.replaceChildren();
  for (const record of components) {
    componentListHost.appendChild(componentEntry(record));
  }
}

function componentEntry(record: ComponentRecord): HTMLElement {
  const entry = document.createElement('div');
  entry.className = 'component-entry';
  const name = document.createElement('span');
  name.textContent = record.name;
  entry.appendChild(name);

  const insert = document.createElement('button');
  insert.textContent = 'Insert';
  insert.addEventListener('click', async () => {
    try {
      const stored = await api.getComponent(record.id);
      const validated = await api.validate(stored.dsl, 'component');
      const ast = validated.ast as { elements: ElementNode[] } | null;
      if (!validated.valid || !ast) {
        showError('Stored component no longer validates.');
        return;
      }
      if (!canvas.insertFragment(ast.elements)) {
        showError('The component does not fit at the selection.');
        return;
      }
      refresh();
    } catch (error) {
      showError(describeApiError(error));
    }
  });
  entry.appendChild(insert);

  const del = document.createElement('button');
  del.textContent = 'Delete';
  del.addEventListener('click', async () => {
    await api.deleteComponent(record.id);
    await renderComponentList();
  });
  entry.appendChild(del);
  return entry;
}

function wireComponents(): void {
  componentGenerateButton.addEventListener('click', async () => {
    const description = el<HTMLTextAreaElement>('component-description').value;
    if (!description.trim()) {
      showError('Describe the component first.');
      return;
    }
    componentGenerateButton.disabled = true;
    try {
      const result = await api.generateComponent(description);
      const ast = result.ast as { elements: ElementNode[] };
      pendingComponent = { dsl: result.dsl, elements: ast.elements };
      el<HTMLPreElement>('component-preview').textContent = result.dsl;
      componentSaveButton.disabled = false;
    } catch (error) {
      showError(describeApiError(error));
    } finally {
      componentGenerateButton.disabled = false;
    }
  });

  componentSaveButton.addEventListener('click', async () => {
    if (!pendingComponent) {
      return;
    }
    const name = el<HTMLInputElement>('component-name').value.trim();
    if (!name) {
      showError('Components need a name.');
      return;
    }
    try {
      await api.createComponent({ name, dsl: pendingComponent.dsl });
      await renderComponentList();
    } catch (error) {
      showError(describeApiError(error)); // DuplicateName surfaces here
    }
  });
}

function download(filename: string, text: string, type: string): void {
  const blob = new Blob([text], { type });
  const link = document.createElement('a');
  link.href = URL.createObjectURL(blob);
  link.download = filename;
  link.click();
  URL.revokeObjectURL(link.href);
}

function wireExport(): void {
  el<HTMLButtonElement>('export-tut').addEventListener('click', async () => {
    try {
      const validated = await api.validate(canvas.serialize());
      if (!validated.canonical) {
        showError('The layout does not parse; fix it before exporting.');
        return;
      }
      download('tutor.tut', validated.canonical + '\n', 'text/plain');
    } catch (error) {
      showError(describeApiError(error));
    }
  });
  el<HTMLButtonElement>('export-html').addEventListener('click', async () => {
    const html = await preview.fetchNow(canvas.serialize());
    if (html !== null) {
      download('tutor.html', html + '\n', 'text/html');
    }
  });
}

export function start(): void {
  wirePalette();
  wireChrome();
  wireGenerate();
  wireComponents();
  wireExport();
  void renderComponentList().catch((error) => showError(describeApiError(error)));
  refresh();
}

start();
