//! The `k - 2` construction for pairs where one target part dominates the
//! source.
//!
//! Three source parts `P, Q, R` are paired with three target parts
//! `P', Q', R'` so that the remaining `k - 3` parts pair up in matching
//! cyclic positions. Each remaining pair is equalized with one two-part move
//! on the source side (surplus into `R`, or a fill out of `P`) or on the
//! target side (deficit covered from `Q'`). One three-part move then joins
//! the two sides, and the target-side moves are undone in reverse. That is at
//! most `(k - 3) + 1` moves.
//!
//! Which parts play which role follows a case split on the small source
//! parts `L = { i : s_i <= Z - t_l }`, `t_l` being the dominant target part:
//!
//! - every part of `L` is lighter than the lightest target part;
//! - some part of `L` lies in `[min t, min t + t_P']`;
//! - otherwise the chosen part is too heavy and is chipped down first.
//!
//! Chipping runs a conveyor leftwards from `P`: each move relocates the
//! separator of the part just before the chips into `P`'s run, so the part
//! merges into its left neighbour while a chip of exactly the paired target
//! weight is carved off the head of `P`. After `m` such moves the `m` parts
//! before `P` hold their target weights and their old contents sit in the
//! part before them. Deficits left over may also be filled out of `P` by
//! two-part moves.
//!
//! If the prescribed roles do not close, every role assignment is tried
//! before giving up, and the trace records that the plan was enumerated.

use serde::{Deserialize, Serialize};

use super::{Orientation, Working};
use crate::bounds::three_feasible;
use crate::error::{Error, Result};
use crate::partition::{to_partition, CircularPartition};
use crate::ring::Ring;
use crate::sequence::TranspositionSequence;
use crate::string::CircularBinaryString;
use crate::transposition::Transposition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma3Case {
    /// Every small source part is lighter than the lightest target part.
    BelowMinimum,
    /// A small source part lies within `t_P'` above the lightest target part.
    Window,
    /// The small source parts are all too heavy; one is chipped down.
    Chipped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlanSource {
    Prescribed,
    Enumerated,
}

/// The closing three-part move. Indices are 1-based into the weights the
/// trace lists; `heads` are the zeros each cut leaves behind its separator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinalMove {
    pub parts: [usize; 3],
    pub parts_t: [usize; 3],
    pub weights: [usize; 3],
    pub weights_t: [usize; 3],
    pub heads: [usize; 3],
    pub cut: Transposition,
}

/// How a sequence was built. With [`Orientation::Swapped`] the construction
/// ran from the target to the source and the returned sequence is its
/// reversal; all fields describe the construction as it ran.
///
/// Part indices are 1-based into `source_weights` and `target_weights`, the
/// weights in separator order on the literals the moves act on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverTrace {
    pub orientation: Orientation,
    pub case: Lemma3Case,
    pub plan: PlanSource,
    pub source_weights: Vec<usize>,
    pub target_weights: Vec<usize>,
    pub dominant: usize,
    pub small: Vec<usize>,
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub alpha_t: usize,
    pub beta_t: usize,
    pub gamma_t: usize,
    /// Target weights outside the three chosen parts, in chipping order.
    pub chips: Vec<usize>,
    /// Fewest leading chips bringing `s_alpha` down to `t_alpha' + t_gamma'`.
    pub chip_count: Option<usize>,
    /// Conveyor moves actually made.
    pub carved: usize,
    pub source_moves: Vec<Transposition>,
    /// Moves on the target literal, before they are undone.
    pub target_moves: Vec<Transposition>,
    /// The classes the two sides reach before the closing move.
    pub meeting: [CircularBinaryString; 2],
    pub final_move: Option<FinalMove>,
}

fn fwd(from: usize, to: usize, k: usize) -> usize {
    (to + k - from) % k
}

fn between(from: usize, to: usize, k: usize) -> impl DoubleEndedIterator<Item = usize> {
    (1..fwd(from, to, k)).map(move |d| (from + d) % k)
}

fn first_max(candidates: impl Iterator<Item = usize>, w: &[usize]) -> Option<usize> {
    candidates.fold(None, |best, i| match best {
        Some(b) if w[b] >= w[i] => Some(b),
        _ => Some(i),
    })
}

fn first_min(candidates: impl Iterator<Item = usize>, w: &[usize]) -> Option<usize> {
    candidates.fold(None, |best, i| match best {
        Some(b) if w[b] <= w[i] => Some(b),
        _ => Some(i),
    })
}

/// Whether some part of `t` is at least every part of `s` while some part of
/// `s` is at most the rest of `t`'s total.
fn hypothesis(s: &[usize], t: &[usize]) -> bool {
    let z: usize = t.iter().sum();
    let (Some(&tl), Some(&smax), Some(&smin)) = (t.iter().max(), s.iter().max(), s.iter().min()) else {
        return false;
    };
    tl >= smax && smin + tl <= z
}

/// The orientation in which the construction applies, if any.
pub fn lemma3_applicable(ps: &CircularPartition, pt: &CircularPartition) -> Result<Option<Orientation>> {
    if !ps.comparable(pt) {
        return Err(Error::MismatchedPartitions);
    }
    if ps.k() < 2 {
        return Err(Error::TooFewParts { k: ps.k(), min: 2 });
    }
    Ok(if hypothesis(ps.weights(), pt.weights()) {
        Some(Orientation::AsGiven)
    } else if hypothesis(pt.weights(), ps.weights()) {
        Some(Orientation::Swapped)
    } else {
        None
    })
}

/// Source part `p` is paired with target part `p_t`, and so on; `q_t` is the
/// dominant target part.
#[derive(Debug, Clone, Copy)]
struct Roles {
    p: usize,
    p_t: usize,
    q_t: usize,
    r_t: usize,
}

#[derive(Debug, Clone, Copy)]
enum Shift {
    /// Conveyor move `step` (1-based) carving `chip` zeros off `P`.
    Carve { step: usize, chip: usize },
    Source { from: usize, to: usize, amount: usize },
    Target { from: usize, to: usize, amount: usize },
}

#[derive(Debug, Clone)]
struct Schedule {
    roles: Roles,
    q: usize,
    r: usize,
    abc: [usize; 3],
    abc_t: [usize; 3],
    shifts: Vec<Shift>,
    heads: [usize; 3],
    final_weights: [usize; 3],
    final_weights_t: [usize; 3],
}

/// Works out every move for one role assignment on weights alone, or `None`
/// if the assignment does not close.
///
/// `carve` conveyor moves settle that many pairs just before `P` first.
/// With `fill`, a deficit is covered out of `P` while `P` is still too heavy
/// for the closing move. `order` lists target parts in the order their pairs
/// are handled; by default pairs go in cyclic order from `a`.
fn schedule(
    s: &[usize],
    t: &[usize],
    roles: Roles,
    carve: usize,
    fill: bool,
    order: Option<&[usize]>,
) -> Option<Schedule> {
    let k = s.len();
    let Roles { p, p_t, q_t, r_t } = roles;
    if p_t == q_t || q_t == r_t || p_t == r_t {
        return None;
    }
    let q = (p + fwd(p_t, q_t, k)) % k;
    let r = (p + fwd(r_t, q_t, k)) % k;
    if q == p || r == p || q == r {
        return None;
    }
    let (abc, abc_t) = if fwd(p, q, k) < fwd(p, r, k) {
        ([p, q, r], [r_t, q_t, p_t])
    } else {
        ([p, r, q], [p_t, q_t, r_t])
    };
    let [a, b, c] = abc;
    let [at, bt, ct] = abc_t;
    if fwd(at, ct, k) != fwd(b, c, k) || fwd(ct, bt, k) != fwd(a, b, k) || fwd(bt, at, k) != fwd(c, a, k) {
        return None;
    }
    let mut pairs: Vec<(usize, usize)> = between(a, b, k)
        .zip(between(ct, bt, k))
        .chain(between(b, c, k).zip(between(at, ct, k)))
        .chain(between(c, a, k).zip(between(bt, at, k)))
        .collect();
    if let Some(order) = order {
        pairs.sort_by_key(|&(_, pt)| order.iter().position(|&o| o == pt));
    }

    let (mut u, mut v) = (s.to_vec(), t.to_vec());
    let mut shifts = Vec::with_capacity(pairs.len());
    if carve > 0 {
        // Pairs just before `a`, nearest first.
        let chain: Vec<(usize, usize)> = between(c, a, k).rev().zip(between(bt, at, k).rev()).collect();
        if carve > chain.len() {
            return None;
        }
        let chips: usize = chain[..carve].iter().map(|&(_, pt)| v[pt]).sum();
        if chips > u[a] {
            return None;
        }
        let blob: usize = chain[..carve].iter().map(|&(ps, _)| u[ps]).sum();
        u[(a + 2 * k - carve - 1) % k] += blob;
        for &(ps, pt) in &chain[..carve] {
            u[ps] = v[pt];
        }
        u[a] -= chips;
        shifts.extend((1..=carve).map(|step| Shift::Carve { step, chip: v[chain[carve - step].1] }));
    }
    for (ps, pt) in pairs {
        if u[ps] > v[pt] {
            let amount = u[ps] - v[pt];
            u[ps] -= amount;
            u[r] += amount;
            shifts.push(Shift::Source { from: ps, to: r, amount });
        } else if u[ps] < v[pt] {
            let amount = v[pt] - u[ps];
            if fill && u[p] > v[p_t] + v[r_t] && u[p] >= amount {
                u[p] -= amount;
                u[ps] += amount;
                shifts.push(Shift::Source { from: p, to: ps, amount });
            } else {
                v[pt] -= amount;
                v[q_t] += amount;
                shifts.push(Shift::Target { from: pt, to: q_t, amount });
            }
        }
    }

    let (sa, sb, sc) = (u[a] as i64, u[b] as i64, u[c] as i64);
    let (ta, tb, tc) = (v[at] as i64, v[bt] as i64, v[ct] as i64);
    let lo = 0.max(ta - sb).max(sa - tc);
    let hi = sa.min(ta).min(sa + sc - tc);
    if sa + sb + sc != ta + tb + tc || lo > hi {
        return None;
    }
    debug_assert!(three_feasible((u[a], u[b], u[c]), (v[at], v[ct], v[bt])));
    let h_a = lo;
    let heads = [h_a, h_a + sb - ta, tc - sa + h_a].map(|h| h as usize);
    Some(Schedule {
        roles,
        q,
        r,
        abc,
        abc_t,
        shifts,
        heads,
        final_weights: [u[a], u[b], u[c]],
        final_weights_t: [v[at], v[bt], v[ct]],
    })
}

/// Target parts other than `P', Q', R'`, in the order the chipping
/// walks them: down from `P'` to `R'`, down from `Q'` to `P'`, then up from
/// `Q'` to `R'`.
fn chip_order(p_t: usize, q_t: usize, r_t: usize, k: usize) -> Vec<usize> {
    if fwd(p_t, q_t, k) < fwd(p_t, r_t, k) {
        between(r_t, p_t, k).rev().chain(between(p_t, q_t, k).rev()).chain(between(q_t, r_t, k)).collect()
    } else {
        (1..k).map(|d| (p_t + k - d) % k).filter(|&j| j != q_t && j != r_t).collect()
    }
}

struct Plan {
    case: Lemma3Case,
    source: PlanSource,
    small: Vec<usize>,
    dominant: usize,
    chips: Vec<usize>,
    chip_count: Option<usize>,
    schedule: Schedule,
}

fn plan(s: &[usize], t: &[usize]) -> Result<Plan> {
    let k = s.len();
    let z: usize = t.iter().sum();
    let l = first_max(0..k, t).expect("k >= 3");
    let small: Vec<usize> = (0..k).filter(|&i| s[i] + t[l] <= z).collect();
    let min_t = *t.iter().min().expect("k >= 3");
    let p_t = first_max((0..k).filter(|&j| j != l), t).expect("k >= 3");
    let r_t = first_min((0..k).filter(|&j| j != l && j != p_t), t).expect("k >= 3");

    let mut chips = Vec::new();
    let mut chip_count = None;
    let (case, prescribed) = if small.iter().all(|&i| s[i] < min_t) {
        let alpha = small[0];
        // Some part lies outside L, or the parts would not add up to Z.
        let beta = (0..k).find(|i| !small.contains(i)).expect("a part outside L");
        let found = (0..k).filter(|&g| g != alpha && g != beta).find_map(|gamma| {
            let roles = Roles { p: alpha, p_t: (l + alpha + k - beta) % k, q_t: l, r_t: (l + alpha + k - gamma) % k };
            schedule(s, t, roles, 0, false, None)
        });
        (Lemma3Case::BelowMinimum, found)
    } else if let Some(&alpha) = small.iter().find(|&&i| min_t <= s[i] && s[i] <= min_t + t[p_t]) {
        let roles = Roles { p: alpha, p_t, q_t: l, r_t };
        (Lemma3Case::Window, schedule(s, t, roles, 0, false, None))
    } else {
        let order = chip_order(p_t, l, r_t, k);
        chips = order.iter().map(|&j| t[j]).collect();
        let goal = t[p_t] + t[r_t];
        let mut found = None;
        for &alpha in small.iter().filter(|&&i| s[i] > min_t + t[p_t]) {
            let mut left = s[alpha];
            let m = (0..=chips.len()).find(|&m| {
                if m > 0 {
                    left = left.saturating_sub(chips[m - 1]);
                }
                left <= goal
            });
            let roles = Roles { p: alpha, p_t, q_t: l, r_t };
            // The minimal chip count first, then every other conveyor length.
            let lengths = m.into_iter().chain((0..k - 2).filter(|&c| Some(c) != m));
            if let Some(sched) = lengths.into_iter().find_map(|c| schedule(s, t, roles, c, true, Some(&order))) {
                chip_count = m;
                found = Some(sched);
                break;
            }
        }
        (Lemma3Case::Chipped, found)
    };

    let make = |source, schedule| Plan {
        case,
        source,
        small: small.clone(),
        dominant: l,
        chips: chips.clone(),
        chip_count,
        schedule,
    };
    if let Some(sched) = prescribed {
        return Ok(make(PlanSource::Prescribed, sched));
    }
    for carve in 0..k - 2 {
        for fill in [false, true] {
            for p in 0..k {
                for p_t in (0..k).filter(|&j| j != l) {
                    for r_t in (0..k).filter(|&j| j != l && j != p_t) {
                        if let Some(sched) = schedule(s, t, Roles { p, p_t, q_t: l, r_t }, carve, fill, None) {
                            return Ok(make(PlanSource::Enumerated, sched));
                        }
                    }
                }
            }
        }
    }
    Err(Error::ConstructionFailed(format!("no role assignment closes for {s:?} -> {t:?}")))
}

/// Runs the construction from `work.source` to `work.target`, which must
/// satisfy the hypothesis in that order and have at least three parts.
fn construct(
    work: &Working,
    from: &CircularBinaryString,
    to: &CircularBinaryString,
    orientation: Orientation,
) -> Result<(TranspositionSequence, SolverTrace)> {
    let mut sring = Ring::new(work.source.clone());
    let mut tring = Ring::new(work.target.clone());
    let (mut ss, ts) = (sring.separators(), tring.separators());
    let (s, t) = (sring.weights(&ss), tring.weights(&ts));
    let plan = plan(&s, &t)?;
    let sched = &plan.schedule;

    let mut source_moves = Vec::new();
    let mut target_moves = Vec::new();
    let mut target_cuts = Vec::new();
    let k = s.len();
    let a = sched.abc[0];
    for shift in &sched.shifts {
        match *shift {
            Shift::Carve { step, chip } => {
                let moved = ss[(a + k - step) % k];
                let cuts = [moved, sring.gap_in_run(moved, 0), sring.gap_in_run(ss[a], chip)];
                source_moves.push(sring.cut(cuts)?);
                // `moved` now owns the rest of P's run; the parts in between
                // slide one place left.
                let turn = (a + 1) % k;
                ss.rotate_left(turn);
                ss.remove(k - 1 - step);
                ss.push(moved);
                ss.rotate_right(turn);
            }
            Shift::Source { from, to, amount } => source_moves.push(sring.shift_zeros(ss[from], ss[to], amount)?.1),
            Shift::Target { from, to, amount } => {
                let (cuts, m) = tring.shift_zeros(ts[from], ts[to], amount)?;
                target_cuts.push(cuts);
                target_moves.push(m);
            }
        }
    }
    let meeting = [sring.class(), tring.class()];
    let final_move = if meeting[0] == meeting[1] {
        None
    } else {
        let cuts = [0, 1, 2].map(|x| sring.gap_in_run(ss[sched.abc[x]], sched.heads[x]));
        let cut = sring.cut(cuts)?;
        Some(FinalMove {
            parts: sched.abc.map(|x| x + 1),
            parts_t: sched.abc_t.map(|x| x + 1),
            weights: sched.final_weights,
            weights_t: sched.final_weights_t,
            heads: sched.heads,
            cut,
        })
    };
    if sring.class() != tring.class() {
        return Err(Error::ConstructionFailed("the two sides do not meet".into()));
    }

    let mut moves = source_moves.clone();
    moves.extend(final_move.as_ref().map(|f| f.cut));
    let mut back = tring.carried_onto(sring.bits())?;
    for cuts in target_cuts.into_iter().rev() {
        moves.push(back.cut(cuts)?);
    }
    let seq = TranspositionSequence { start: from.clone(), moves, claimed_end: to.clone() }.validated()?;

    let roles = sched.roles;
    let trace = SolverTrace {
        orientation,
        case: plan.case,
        plan: plan.source,
        source_weights: s,
        target_weights: t,
        dominant: plan.dominant + 1,
        small: plan.small.iter().map(|i| i + 1).collect(),
        alpha: roles.p + 1,
        beta: sched.q + 1,
        gamma: sched.r + 1,
        alpha_t: roles.p_t + 1,
        beta_t: roles.q_t + 1,
        gamma_t: roles.r_t + 1,
        chips: plan.chips,
        chip_count: plan.chip_count,
        carved: sched.shifts.iter().filter(|m| matches!(m, Shift::Carve { .. })).count(),
        source_moves,
        target_moves,
        meeting,
        final_move,
    };
    Ok((seq, trace))
}

/// A sequence of at most `k - 2` moves from `s` to `t`, with a description
/// of how it was built. Equal classes give the empty sequence and no trace.
pub fn lemma3_solve_traced(
    s: &CircularBinaryString,
    t: &CircularBinaryString,
) -> Result<(TranspositionSequence, Option<SolverTrace>)> {
    if !s.compatible_with(t) {
        return Err(Error::Incompatible);
    }
    if s == t {
        return Ok((TranspositionSequence::empty(s.clone()), None));
    }
    let k = s.part_count();
    if k < 2 {
        return Err(Error::TooFewParts { k, min: 2 });
    }
    let orientation = lemma3_applicable(&to_partition(s)?, &to_partition(t)?)?
        .ok_or(Error::Precondition("no part of either string dominates the other"))?;
    if k == 2 {
        return Err(Error::ConstructionFailed("with two parts the hypothesis forces equal classes".into()));
    }
    let (from, to) = match orientation {
        Orientation::AsGiven => (s, t),
        Orientation::Swapped => (t, s),
    };
    let (seq, trace) = construct(&Working::new(from, to)?, from, to, orientation)?;
    let seq = match orientation {
        Orientation::AsGiven => seq,
        Orientation::Swapped => seq.reversed()?,
    };
    if seq.len() + 2 > k {
        return Err(Error::ConstructionFailed(format!("{} moves for {k} parts", seq.len())));
    }
    Ok((seq, Some(trace)))
}

/// A sequence of at most `k - 2` moves from `s` to `t`.
pub fn lemma3_solve(s: &CircularBinaryString, t: &CircularBinaryString) -> Result<TranspositionSequence> {
    lemma3_solve_traced(s, t).map(|(seq, _)| seq)
}
