import { ElementNode, LayoutTree } from './types.js';

// Serialization of the canvas tree to layout text. This is the one
// piece of layout syntax the client knows; parsing and rendering stay
// on the backend.

export function escapeValue(value: string): string {
  return value.replace(/\\/g, '\\\\').replace(/]/g, '\\]');
}

function printElement(node: ElementNode, indent: number, lines: string[]): void {
  const pad = '  '.repeat(indent);
  switch (node.kind) {
    case 'row':
    case 'column':
      lines.push(`${pad}${node.kind} {`);
      for (const child of node.children) {
        printElement(child, indent + 1, lines);
      }
      lines.push(`${pad}}`);
      break;
    case 'label':
      lines.push(`${pad}label[${escapeValue(node.value)}]`);
      break;
    case 'input':
      if (node.placeholder === null) {
        lines.push(`${pad}input`);
      } else {
        lines.push(`${pad}input[${escapeValue(node.placeholder)}]`);
      }
      break;
  }
}

export function serializeLayout(layout: LayoutTree): string {
  const lines: string[] = [`title[${escapeValue(layout.title)}]`];
  for (const node of layout.body) {
    printElement(node, 0, lines);
  }
  return lines.join('\n');
}

export function serializeElements(elements: ElementNode[]): string {
  const lines: string[] = [];
  for (const node of elements) {
    printElement(node, 0, lines);
  }
  return lines.join('\n');
}
