// Selection-as-context: highlighting editor text fills the prompt panel's
// context box; clearing the selection leaves an already-filled box alone so
// the writer can still edit it by hand.

export interface ContextBox {
  value: string;
}

export function selectionToContext(box: ContextBox, selectedText: string): ContextBox {
  if (selectedText === '') return box;
  return { value: selectedText };
}
