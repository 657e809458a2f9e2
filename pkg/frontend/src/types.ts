export type Role = "R" | "S";

export type Status = "ongoing" | "r_won" | "s_won";

export interface GraphView {
  n: number;
  edges: [number, number][];
  labels?: string[];
}

export interface FamilySpec {
  kind: string;
  params: number[];
}

export interface StateView {
  r_claimed: number[];
  s_claimed: number[];
  to_move: Role | null;
}

export interface MoveRecord {
  player: Role;
  vertex: number;
  status_after: Status;
  made_resolving: boolean;
  killed_completion: boolean;
}

export interface SolvedRecord {
  outcome: "R" | "S" | "N";
  r_mb: number | null;
  r_mb_s: number | null;
  s_mb: number | null;
  s_mb_s: number | null;
}

export interface SessionView {
  id: string;
  graph: GraphView;
  family: FamilySpec | null;
  human_role: Role;
  first_player: Role;
  state: StateView;
  status: Status;
  history: MoveRecord[];
  resolver_set_resolving: boolean;
  position_dead: boolean;
  solved: SolvedRecord | null;
}

export interface Hint {
  vertex: number;
  tag: "twin-grab" | "pairing-completion" | "search";
}

export interface FamilyCatalogEntry {
  kind: string;
  params: { name: string; min: number }[];
  variadic: boolean;
  description: string;
}
