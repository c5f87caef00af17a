//! The fixed list of named identities checked by the suite.
//!
//! Every entry carries its equations in the identity language and a
//! hand-written evaluator over precomputed basis images; the two routes are
//! kept independent so each can serve as an oracle for the other.

use std::sync::OnceLock;

use crate::identity::ast::{Identity, MapName, Var};
use crate::identity::builtin::{self, Builtin};
use crate::identity::parse_identity;

/// How the equations of an entry combine into one verdict.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Combine {
    /// Every equation holds on every basis tuple.
    All,
    /// The equations split into groups of `group`; the entry passes when all
    /// groups have the same verdict.
    Agreement { group: usize },
}

#[derive(Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    /// Formula the entry stands for.
    pub anchor: &'static str,
    /// Only asserted for pairs satisfying the defining relations.
    pub conditional: bool,
    /// Reported but excluded from the overall pass/fail decision.
    pub disputed: bool,
    pub combine: Combine,
    pub equations: Vec<Identity>,
    pub(crate) builtin: Builtin,
}

impl CatalogEntry {
    /// Free variables across all equations, in canonical order.
    pub fn vars(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self.equations.iter().flat_map(|e| e.vars.iter().copied()).collect();
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn arity(&self) -> usize {
        self.vars().len()
    }
}

const MAPS: [(MapName, MapName, MapName); 3] = [
    (MapName::S, MapName::T, MapName::P),
    (MapName::T, MapName::P, MapName::S),
    (MapName::P, MapName::S, MapName::T),
];

fn conj(m: MapName) -> MapName {
    match m {
        MapName::S => MapName::Sp,
        MapName::T => MapName::Tp,
        MapName::P => MapName::Pp,
        other => other,
    }
}

/// The pairs `(A, B)` and signs with `g·(S,T) = (±A, ±B)`, in the order
/// `id, σ, σ², τ, στ, σ²τ`.
pub(crate) const ORBIT_PAIRS: [(MapName, MapName, bool); 6] = [
    (MapName::S, MapName::T, false),
    (MapName::T, MapName::P, false),
    (MapName::P, MapName::S, false),
    (MapName::T, MapName::S, true),
    (MapName::S, MapName::P, true),
    (MapName::P, MapName::T, true),
];

fn mm_pair(a: MapName, b: MapName, negated: bool) -> [String; 2] {
    let sign = if negated { "-" } else { "" };
    [
        format!("[{a}(x),{a}(y)] = {sign}{a}([x,y]) - 2*[{a}(x),{b}(y)]"),
        format!("[{b}(x),{b}(y)] = {sign}{b}([y,x]) - 2*[{b}(x),{a}(y)]"),
    ]
}

fn entries() -> Vec<(&'static str, &'static str, bool, bool, Combine, Vec<String>, Builtin)> {
    use Combine::All;
    let per_map = |f: &dyn Fn(MapName, MapName, MapName) -> String| -> Vec<String> {
        MAPS.iter().map(|&(a, b, c)| f(a, b, c)).collect()
    };
    let [mm_a, mm_b] = mm_pair(MapName::S, MapName::T, false);
    let orbit: Vec<String> = ORBIT_PAIRS.iter().flat_map(|&(a, b, n)| mm_pair(a, b, n)).collect();
    let conj_def: Vec<String> = [MapName::P, MapName::S, MapName::T]
        .iter()
        .flat_map(|&c| {
            // c+ = a - b = c + 2a = -c - 2b with (a, b) the next two in the cycle after c.
            let (a, b) = match c {
                MapName::P => (MapName::S, MapName::T),
                MapName::S => (MapName::T, MapName::P),
                _ => (MapName::P, MapName::S),
            };
            let cp = conj(c);
            [
                format!("{cp}(x) = {a}(x) - {b}(x)"),
                format!("{cp}(x) = {c}(x) + 2*{a}(x)"),
                format!("{cp}(x) = -{c}(x) - 2*{b}(x)"),
            ]
        })
        .collect();
    let conj_inv: Vec<String> = [MapName::P, MapName::S, MapName::T]
        .iter()
        .flat_map(|&c| {
            // 3c = a+ - b+ = c+ + 2a+ = -c+ - 2b+ where (a, b) precede c in the cycle.
            let (a, b) = match c {
                MapName::P => (MapName::T, MapName::S),
                MapName::S => (MapName::P, MapName::T),
                _ => (MapName::S, MapName::P),
            };
            let (ap, bp, cp) = (conj(a), conj(b), conj(c));
            [
                format!("3*{c}(x) = {ap}(x) - {bp}(x)"),
                format!("3*{c}(x) = {cp}(x) + 2*{ap}(x)"),
                format!("3*{c}(x) = -{cp}(x) - 2*{bp}(x)"),
            ]
        })
        .collect();
    let conj_mm: Vec<String> = MAPS
        .iter()
        .flat_map(|&(a, _, _)| {
            let ap = conj(a);
            [
                format!("[{a}(x),{ap}(y)] = {a}([x,y])"),
                format!("[{ap}(x),{a}(y)] = {a}([x,y])"),
            ]
        })
        .collect();
    let y_tri: Vec<String> = ORBIT_PAIRS
        .iter()
        .map(|&(a, b, _)| {
            let c = MAPS.iter().map(|m| m.0).find(|&m| m != a && m != b).expect("third map");
            format!("6*Y(x;y) = [{a}(x),{a}(y)] + [{b}(x),{b}(y)] + [{c}(x),{c}(y)]")
        })
        .collect();
    let decomp = |a: MapName, b: MapName| -> Vec<String> {
        vec![
            format!("[{a}(x),{a}(y)] = 2*Y(x;y) + 1/3*{a}([x,y]) + 2/3*{b}([x,y])"),
            format!("[{a}(x),{b}(y)] = -Y(x;y) + 1/3*{a}([x,y]) - 1/3*{b}([x,y])"),
            format!("[{b}(x),{b}(y)] = 2*Y(x;y) - 2/3*{a}([x,y]) - 1/3*{b}([x,y])"),
            format!("3*[{a}(x),{a}(y)] = 6*Y(x;y) + {a}([x,y]) + 2*{b}([x,y])"),
            format!("3*[{a}(x),{b}(y)] = -3*Y(x;y) + {a}([x,y]) - {b}([x,y])"),
            format!("3*[{b}(x),{b}(y)] = 6*Y(x;y) - 2*{a}([x,y]) - {b}([x,y])"),
        ]
    };
    let cyc_conj = |m: MapName, rhs: MapName| {
        let (mp, rp) = (conj(m), conj(rhs));
        vec![format!(
            "[{mp}([x,y]),{mp}(z)] + [{mp}([y,z]),{mp}(x)] + [{mp}([z,x]),{mp}(y)] = -{rp}(J(x,y,z))"
        )]
    };
    use MapName::{P, S, T};
    vec![
        ("MM-1A", "[S_x,S_y] = S_[x,y] - 2[S_x,T_y]", false, false, All, vec![mm_a], Builtin::Sweep(builtin::mm_1a)),
        ("MM-1B", "[T_x,T_y] = T_[y,x] - 2[T_x,S_y]", false, false, All, vec![mm_b], Builtin::Sweep(builtin::mm_1b)),
        ("ST-SYM", "[S_x,T_y] = [T_x,S_y]", true, false, All, vec!["[S(x),T(y)] = [T(x),S(y)]".into()], Builtin::Sweep(builtin::st_sym)),
        (
            "MIN",
            "2[S_x,T_y] = S_[x,y] - [S_x,S_y] = T_[y,x] - [T_x,T_y] = 2[T_x,S_y]",
            false,
            false,
            All,
            vec![
                "2*[S(x),T(y)] = S([x,y]) - [S(x),S(y)]".into(),
                "S([x,y]) - [S(x),S(y)] = T([y,x]) - [T(x),T(y)]".into(),
                "T([y,x]) - [T(x),T(y)] = 2*[T(x),S(y)]".into(),
            ],
            Builtin::Sweep(builtin::min),
        ),
        ("ORBIT", "(S,T) MM <=> g(S,T) MM for all g in the substitution group", false, false, Combine::Agreement { group: 2 }, orbit, Builtin::Orbit),
        ("CONJ-DEF", "P+ = S-T = P+2S = -P-2T (and cyclic)", false, false, All, conj_def, Builtin::Sweep(builtin::conj_def)),
        ("CONJ-SUM", "S+ + T+ + P+ = 0", false, false, All, vec!["Sp(x) + Tp(x) + Pp(x) = 0".into()], Builtin::Sweep(builtin::conj_sum)),
        ("CONJ-MM", "[S_x,S+_y] = [S+_x,S_y] = S_[x,y] (and cyclic)", true, false, All, conj_mm, Builtin::Sweep(builtin::conj_mm)),
        ("CONJ-INV", "3P = T+ - S+ = P+ + 2T+ = -P+ - 2S+ (and cyclic)", false, false, All, conj_inv, Builtin::Sweep(builtin::conj_inv)),
        (
            "Y-SKEW",
            "6Y(x;y) = [S_x,S_y] + [T_x,T_y] + [P_x,P_y] = -6Y(y;x)",
            false,
            false,
            All,
            vec![
                "6*Y(x;y) = [S(x),S(y)] + [T(x),T(y)] + [P(x),P(y)]".into(),
                "Y(x;y) = -Y(y;x)".into(),
            ],
            Builtin::Sweep(builtin::y_skew),
        ),
        ("Y-TRI", "Y(g.t) = Y(t) for all g in the substitution group", false, false, All, y_tri, Builtin::YTri),
        ("Y-ALT1", "6Y(x;y) = 3[S_x,S_y] - S+_[x,y] (and cyclic)", true, false, All, per_map(&|a, _, _| format!("6*Y(x;y) = 3*[{a}(x),{a}(y)] - {}([x,y])", conj(a))), Builtin::Sweep(builtin::y_alt1)),
        ("Y-ALT2", "6Y(x;y) = 2P+_[x,y] - 6[S_x,T_y] (and cyclic)", true, false, All, per_map(&|a, b, c| format!("6*Y(x;y) = 2*{}([x,y]) - 6*[{a}(x),{b}(y)]", conj(c))), Builtin::Sweep(builtin::y_alt2)),
        ("Y-CONJ", "6Y(x;y) = [S+_x,S+_y] + S+_[x,y] (and cyclic)", true, false, All, per_map(&|a, _, _| {
            let ap = conj(a);
            format!("6*Y(x;y) = [{ap}(x),{ap}(y)] + {ap}([x,y])")
        }), Builtin::Sweep(builtin::y_conj)),
        (
            "Y-18",
            "18Y(x;y) = [S+_x,S+_y] + [T+_x,T+_y] + [P+_x,P+_y]",
            true,
            false,
            All,
            vec!["18*Y(x;y) = [Sp(x),Sp(y)] + [Tp(x),Tp(y)] + [Pp(x),Pp(y)]".into()],
            Builtin::Sweep(builtin::y_18),
        ),
        ("DECOMP-ST", "[S_x,S_y] = 2Y(x;y) + 1/3 S_[x,y] + 2/3 T_[x,y], ...", true, false, All, decomp(S, T), Builtin::Sweep(builtin::decomp_st)),
        ("DECOMP-TP", "[T_x,T_y] = 2Y(x;y) + 1/3 T_[x,y] + 2/3 P_[x,y], ...", true, false, All, decomp(T, P), Builtin::Sweep(builtin::decomp_tp)),
        ("DECOMP-PS", "[P_x,P_y] = 2Y(x;y) + 1/3 P_[x,y] + 2/3 S_[x,y], ...", true, false, All, decomp(P, S), Builtin::Sweep(builtin::decomp_ps)),
        ("Y-ACT", "6[Y(x;y),S_z] = 3[[S_x,S_y],S_z] - S_[[x,y],z] (and cyclic)", true, false, All, per_map(&|a, _, _| format!("6*[Y(x;y),{a}(z)] = 3*[[{a}(x),{a}(y)],{a}(z)] - {a}([[x,y],z])")), Builtin::Sweep(builtin::y_act)),
        (
            "TRI-SUM3",
            "[[S_x,S_y],S_z] + [[T_x,T_y],T_z] + [[P_x,P_y],P_z] = 0",
            true,
            false,
            All,
            vec!["[[S(x),S(y)],S(z)] + [[T(x),T(y)],T(z)] + [[P(x),P(y)],P(z)] = 0".into()],
            Builtin::Sweep(builtin::tri_sum3),
        ),
        ("Y-J", "6[Y(x;y),S_z] + 6[Y(y;z),S_x] + 6[Y(z;x),S_y] = -S_J(x,y,z) (and cyclic)", true, false, All, per_map(&|a, _, _| format!("6*[Y(x;y),{a}(z)] + 6*[Y(y;z),{a}(x)] + 6*[Y(z;x),{a}(y)] = -{a}(J(x,y,z))")), Builtin::Sweep(builtin::y_j)),
        ("CONJ-J-A-PAPER", "[S+_[x,y],S+_z] + cyclic = -P+_J(x,y,z)", true, true, All, cyc_conj(S, P), Builtin::Sweep(builtin::conj_j_a_paper)),
        ("CONJ-J-A-TRIALITY", "[S+_[x,y],S+_z] + cyclic = -S+_J(x,y,z)", true, false, All, cyc_conj(S, S), Builtin::Sweep(builtin::conj_j_a_triality)),
        ("CONJ-J-B", "[T+_[x,y],T+_z] + cyclic = -T+_J(x,y,z)", true, false, All, cyc_conj(T, T), Builtin::Sweep(builtin::conj_j_b)),
        ("CONJ-J-C", "[P+_[x,y],P+_z] + cyclic = -P+_J(x,y,z)", true, false, All, cyc_conj(P, P), Builtin::Sweep(builtin::conj_j_c)),
        (
            "Y-CYC",
            "Y([x,y];z) + Y([y,z];x) + Y([z,x];y) = 0",
            true,
            false,
            All,
            vec!["Y([x,y];z) + Y([y,z];x) + Y([z,x];y) = 0".into()],
            Builtin::Sweep(builtin::y_cyc),
        ),
    ]
}

/// All entries in report order.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        entries()
            .into_iter()
            .map(|(id, anchor, conditional, disputed, combine, eqs, builtin)| CatalogEntry {
                id,
                anchor,
                conditional,
                disputed,
                combine,
                equations: eqs
                    .iter()
                    .map(|e| parse_identity(e).unwrap_or_else(|err| panic!("catalog {id}: {err}: {e}")))
                    .collect(),
                builtin,
            })
            .collect()
    })
}

pub fn lookup(id: &str) -> Option<&'static CatalogEntry> {
    catalog().iter().find(|e| e.id.eq_ignore_ascii_case(id))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_ordered() {
        let ids: Vec<&str> = catalog().iter().map(|e| e.id).collect();
        assert_eq!(ids.len(), 26);
        assert_eq!(&ids[..2], &["MM-1A", "MM-1B"]);
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
    }

    #[test]
    fn arities() {
        assert_eq!(lookup("CONJ-SUM").unwrap().arity(), 1);
        assert_eq!(lookup("MM-1A").unwrap().arity(), 2);
        assert_eq!(lookup("Y-CYC").unwrap().arity(), 3);
        assert!(catalog().iter().all(|e| (1..=3).contains(&e.arity())));
    }

    #[test]
    fn exactly_one_disputed_entry() {
        let disputed: Vec<&str> = catalog().iter().filter(|e| e.disputed).map(|e| e.id).collect();
        assert_eq!(disputed, ["CONJ-J-A-PAPER"]);
    }

    #[test]
    fn decomp_has_raw_and_cleared_forms() {
        let e = lookup("decomp-st").unwrap();
        assert_eq!(e.equations.len(), 6);
        assert!(e.equations[0].text.contains("1/3"));
        assert!(!e.equations[3].text.contains('/'));
    }

    #[test]
    fn orbit_groups_match_substitutions() {
        let e = lookup("ORBIT").unwrap();
        assert_eq!(e.equations.len(), 12);
        assert_eq!(e.equations[6].text, "[T(x),T(y)] = -T([x,y]) - 2*[T(x),S(y)]");
    }
}
