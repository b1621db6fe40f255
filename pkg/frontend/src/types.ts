/** Wire-format documents exchanged with the rolerank service. */

export interface CriterionSpecDoc {
  id: string;
  orientation: "cost" | "benefit";
  firstRowPreference: number;
}

export interface QueryDoc {
  required: string[];
  s: number;
  criteria: CriterionSpecDoc[];
  alpha: number;
  lambda: number;
}

export interface RoleScoreDoc {
  role: string;
  dp: number;
  dr: number;
  extended: Record<string, number>;
  perCriterionWeight: Record<string, number>;
  probability: number;
}

export interface RankingDoc {
  mode: "ranked" | "exact-match";
  scores: RoleScoreDoc[];
  selected: string;
  parameters: QueryDoc;
  version: number;
}

export interface ChangePointDoc {
  sLow: number;
  sHigh: number;
  before: string[];
  after: string[];
}

export interface SweepDoc {
  grid: number[];
  rankings: RankingDoc[];
  changePoints: ChangePointDoc[];
  version: number;
}

export interface RoleSummaryDoc {
  id: string;
  directPermissions: number;
  effectivePermissions: number;
  dr: number;
  dm: number;
  juniors: string[];
  grants: string[];
}

export interface RolesDoc {
  version: number;
  roles: RoleSummaryDoc[];
}

export type CriterionToggle = "availability" | "integrity" | "manager-cost";

export interface UiState {
  selectedPermissions: Set<string>;
  s: number;
  criteria: Record<CriterionToggle, boolean>;
  alpha: number;
  lambda: number;
}

export function initialState(): UiState {
  return {
    selectedPermissions: new Set(),
    s: 1.0,
    criteria: { availability: false, integrity: false, "manager-cost": false },
    alpha: 1.0,
    lambda: 1.0,
  };
}

export function enabledCriteria(state: UiState): CriterionToggle[] {
  return (Object.keys(state.criteria) as CriterionToggle[]).filter(
    (id) => state.criteria[id],
  );
}
