// JSON payload shapes of the puzzle service (docs/interchange.schema.json).

export type Letter = "a" | "b";
export type LineKind = "row" | "col" | "box";
export type LineStatusValue = "altValid" | "bltValid" | "invalid" | "incomplete";

export interface PuzzleJson {
  n: number;
  m: number;
  cells: string[];
  variant: "base" | "counts" | "countsPlusClues" | "boxes" | "boxesWild";
  rowACounts: number[] | null;
  colACounts: number[] | null;
  boxRows: number | null;
  boxCols: number | null;
  forbiddenFactors: string[];
}

export interface LineStatus {
  kind: LineKind;
  index: number;
  status: LineStatusValue;
}

export interface CheckResponse {
  lines: LineStatus[];
  solved: boolean;
}

export interface HintAssignment {
  row: number;
  col: number;
  letter: Letter;
}

export interface HintDeduction {
  rule: string;
  assignments: HintAssignment[];
  explanation: string;
}

export interface HintStatus {
  status: "exhausted" | "contradiction";
  line?: { kind: LineKind; index: number };
}

export type HintResponse = HintDeduction | HintStatus;

export function isDeduction(hint: HintResponse): hint is HintDeduction {
  return "rule" in hint;
}

export interface SolutionJson {
  cells: string[];
  lineOrders: { kind: LineKind; index: number; order: "alt" | "blt" }[];
}

export interface CreateRequest {
  n: number;
  m: number;
  variant?: string;
  seed?: number;
}

export interface CreateResponse {
  id: string;
  puzzle: PuzzleJson;
}

export function lineKey(kind: LineKind, index: number): string {
  return `${kind}:${index}`;
}
