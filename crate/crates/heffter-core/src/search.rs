//! Bounded search for rank-one Heffter arrays on admissible pairs, and the
//! pair-classification scan.
//!
//! A rank-one H(m,n) is exactly a factorization of a half-set into zero-sum
//! factor sets of sizes m and n, so the search enumerates candidate factor
//! pairs (X, Y). Both factors are normalized to contain 1, which loses no
//! factor set: any factorization can be rescaled by (cX, c⁻¹Y), and the
//! global sign flip X ↦ −X moves between a half-set and its complement.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::arith;
use crate::array::HeffterArray;
use crate::constructions::{classify_pair, PairClass};
use crate::cyclotomy::subgroup_of_order;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStrategy {
    /// Enumerate zero-sum m-subsets X with 1 ∈ X and zero-sum n-subsets Y
    /// with 1 ∈ Y, pruning on incremental product collisions.
    Exhaustive,
    /// Fix X structurally: the subgroup of order m when m is odd, otherwise
    /// unions of m/m_o cosets of the subgroup of order m_o (zero-sum for
    /// free). Falls back to plain zero-sum enumeration when m is a power of
    /// two. Y is enumerated as in the exhaustive strategy.
    SubgroupSeeded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub m: u64,
    pub n: u64,
    /// Budget on candidate factor pairs examined (completions of the
    /// solve-last step, whether or not the solved element is usable).
    pub max_candidates: u64,
    pub strategy: SearchStrategy,
    /// Reserved for randomized orderings; both current strategies are fully
    /// deterministic and ignore it.
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub found: Option<HeffterArray>,
    pub candidates_examined: u64,
    /// True iff the strategy's candidate space was fully enumerated without
    /// success; false when a witness was found or the budget ran out.
    pub exhausted: bool,
}

pub fn search_rank_one(cfg: &SearchConfig) -> Result<SearchOutcome> {
    let class = classify_pair(cfg.m, cfg.n)?;
    if !class.admissible {
        return Err(Error::NotAdmissible);
    }
    if cfg.max_candidates == 0 {
        return Err(Error::InvalidArgument("candidate budget must be at least 1"));
    }
    let (p, k) = class.prime_power.expect("admissible pair");
    let field = Arc::new(Field::new(p, k, None)?);
    let mut ctx = SearchContext::new(&field, cfg.n as usize, cfg.max_candidates);
    let m = cfg.m as usize;

    let completed = match cfg.strategy {
        SearchStrategy::Exhaustive => {
            enumerate_zero_sum_sets(&field, m, &mut |x| ctx.try_x(x))
        }
        SearchStrategy::SubgroupSeeded => {
            let m_odd = arith::odd_part(cfg.m);
            if cfg.m % 2 == 1 {
                let x = subgroup_of_order(&field, cfg.m)?.elements().to_vec();
                ctx.try_x(&x).is_continue()
            } else if m_odd > 1 {
                enumerate_coset_unions(&field, m_odd, (cfg.m / m_odd) as usize, &mut |x| {
                    ctx.try_x(x)
                })
            } else {
                enumerate_zero_sum_sets(&field, m, &mut |x| ctx.try_x(x))
            }
        }
    };

    let found = match ctx.witness.take() {
        Some((x, y)) => Some(HeffterArray::from_factors(&field, &x, &y)?),
        None => None,
    };
    Ok(SearchOutcome {
        exhausted: completed && found.is_none(),
        candidates_examined: ctx.examined,
        found,
    })
}

struct SearchContext {
    field: Arc<Field>,
    n: usize,
    max_candidates: u64,
    examined: u64,
    witness: Option<(Vec<FieldElement>, Vec<FieldElement>)>,
    /// mark[enc] == stamp means the product is present for the current
    /// partial Y; bumping the stamp clears the whole table at once.
    mark: Vec<u64>,
    stamp: u64,
    x: Vec<FieldElement>,
    y_free: Vec<FieldElement>,
    /// Encodings marked per chosen Y element, for backtracking.
    undo: Vec<Vec<u32>>,
}

impl SearchContext {
    fn new(field: &Arc<Field>, n: usize, max_candidates: u64) -> SearchContext {
        SearchContext {
            field: Arc::clone(field),
            n,
            max_candidates,
            examined: 0,
            witness: None,
            mark: vec![0; field.order() as usize],
            stamp: 0,
            x: Vec::new(),
            y_free: Vec::new(),
            undo: Vec::new(),
        }
    }

    /// Runs the pruned Y enumeration against one candidate X.
    fn try_x(&mut self, x: &[FieldElement]) -> ControlFlow<()> {
        self.stamp += 1;
        self.x = x.to_vec();
        self.y_free.clear();
        self.undo.clear();

        // y₁ = 1 contributes the products X·1 = X. A collision here means X
        // itself contains a ± pair and no Y can repair it.
        let mut base = Vec::new();
        let one = self.field.one();
        for i in 0..self.x.len() {
            let v = self.x[i];
            if !self.mark_product(v, &mut base) {
                return ControlFlow::Continue(());
            }
        }
        self.undo.push(base);
        let sum = one;
        let hi = self.field.order() - 2;
        let result = self.choose_free(self.n - 2, hi, sum);
        if result.is_break() {
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    }

    /// Colex enumeration of the free Y logs: each level chooses the largest
    /// remaining log, ascending, then recurses on strictly smaller ones, so
    /// candidate sets come out ordered by their maxima. `hi` is the largest
    /// log still available, `remaining` counts frees left to choose, `sum`
    /// accumulates 1 + the chosen elements.
    fn choose_free(&mut self, remaining: usize, hi: u64, sum: FieldElement) -> ControlFlow<()> {
        if remaining == 0 {
            return self.solve_last(sum);
        }
        for log in remaining as u64..=hi {
            let y = self.field.exp(log);
            let mut marked = Vec::new();
            let mut ok = true;
            for i in 0..self.x.len() {
                let v = self.field.mul(self.x[i], y);
                if !self.mark_product(v, &mut marked) {
                    ok = false;
                    break;
                }
            }
            if ok {
                self.y_free.push(y);
                self.undo.push(marked);
                let next_sum = self.field.add(sum, y);
                if self.choose_free(remaining - 1, log - 1, next_sum).is_break() {
                    return ControlFlow::Break(());
                }
                let marked = self.undo.pop().expect("pushed above");
                self.unmark(&marked);
                self.y_free.pop();
            } else {
                self.unmark(&marked);
            }
        }
        ControlFlow::Continue(())
    }

    /// The zero-sum constraint determines the last Y element. Accepting only
    /// solutions with a larger log than every free element enumerates each
    /// candidate set exactly once.
    fn solve_last(&mut self, sum: FieldElement) -> ControlFlow<()> {
        self.examined += 1;
        let z = self.field.neg(sum);
        'attempt: {
            if z.is_zero() {
                break 'attempt;
            }
            let z_log = self.field.discrete_log(z).expect("nonzero");
            let max_free = self
                .y_free
                .first()
                .map(|&y| self.field.discrete_log(y).expect("nonzero"))
                .unwrap_or(0);
            if z_log <= max_free {
                break 'attempt;
            }
            let mut marked = Vec::new();
            let mut ok = true;
            for i in 0..self.x.len() {
                let v = self.field.mul(self.x[i], z);
                if !self.mark_product(v, &mut marked) {
                    ok = false;
                    break;
                }
            }
            self.unmark(&marked);
            if ok {
                let f = &self.field;
                let mut y: Vec<FieldElement> = Vec::with_capacity(self.n);
                y.push(f.one());
                y.extend(self.y_free.iter().rev());
                y.push(z);
                self.witness = Some((self.x.clone(), y));
                return ControlFlow::Break(());
            }
        }
        if self.examined >= self.max_candidates {
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    }

    /// Marks a product unless it or its negative is already present; both
    /// conditions kill the candidate, since the target product set must be
    /// duplicate-free and one-per-{v, −v}.
    fn mark_product(&mut self, v: FieldElement, marked: &mut Vec<u32>) -> bool {
        let enc = v.encoding() as usize;
        let neg_enc = self.field.neg(v).encoding() as usize;
        if self.mark[enc] == self.stamp || self.mark[neg_enc] == self.stamp {
            return false;
        }
        self.mark[enc] = self.stamp;
        marked.push(enc as u32);
        true
    }

    fn unmark(&mut self, marked: &[u32]) {
        for &enc in marked {
            self.mark[enc as usize] = 0;
        }
    }
}

/// Enumerates zero-sum `size`-subsets of F_q^* containing 1, in a
/// deterministic colex-style order over discrete logs: size−2 free logs are
/// chosen and the zero-sum constraint solves for the last element, accepted
/// only when its log exceeds all free logs. Returns true when the space was
/// fully enumerated.
fn enumerate_zero_sum_sets(
    field: &Arc<Field>,
    size: usize,
    visit: &mut impl FnMut(&[FieldElement]) -> ControlFlow<()>,
) -> bool {
    let mut free = Vec::with_capacity(size - 2);
    let hi = field.order() - 2;
    recurse(field, size - 2, hi, field.one(), &mut free, visit).is_continue()
}

fn recurse(
    field: &Arc<Field>,
    remaining: usize,
    hi: u64,
    sum: FieldElement,
    free: &mut Vec<FieldElement>,
    visit: &mut impl FnMut(&[FieldElement]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if remaining == 0 {
        let z = field.neg(sum);
        if z.is_zero() {
            return ControlFlow::Continue(());
        }
        let z_log = field.discrete_log(z).expect("nonzero");
        let max_free = free
            .first()
            .map(|&y| field.discrete_log(y).expect("nonzero"))
            .unwrap_or(0);
        if z_log <= max_free {
            return ControlFlow::Continue(());
        }
        let mut set: Vec<FieldElement> = Vec::with_capacity(free.len() + 2);
        set.push(field.one());
        set.extend(free.iter().rev());
        set.push(z);
        return visit(&set);
    }
    for log in remaining as u64..=hi {
        let y = field.exp(log);
        free.push(y);
        let r = recurse(field, remaining - 1, log - 1, field.add(sum, y), free, visit);
        free.pop();
        if r.is_break() {
            return ControlFlow::Break(());
        }
    }
    ControlFlow::Continue(())
}

/// Enumerates unions of `count` cosets of the subgroup of order `d`,
/// always including the identity coset; each union is zero-sum because d > 1.
/// The union is listed class by class, ascending class index, each class in
/// ascending log order. Returns true when fully enumerated.
fn enumerate_coset_unions(
    field: &Arc<Field>,
    d: u64,
    count: usize,
    visit: &mut impl FnMut(&[FieldElement]) -> ControlFlow<()>,
) -> bool {
    let e = (field.order() - 1) / d;
    let mut chosen: Vec<u64> = Vec::with_capacity(count - 1);
    fn walk(
        field: &Arc<Field>,
        d: u64,
        e: u64,
        remaining: usize,
        hi: u64,
        chosen: &mut Vec<u64>,
        visit: &mut impl FnMut(&[FieldElement]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if remaining == 0 {
            let mut indices: Vec<u64> = Vec::with_capacity(chosen.len() + 1);
            indices.push(0);
            indices.extend(chosen.iter().rev());
            let mut union = Vec::with_capacity((chosen.len() + 1) * d as usize);
            for &i in &indices {
                for t in 0..d {
                    union.push(field.exp(i + e * t));
                }
            }
            return visit(&union);
        }
        for i in remaining as u64..=hi {
            chosen.push(i);
            let r = walk(field, d, e, remaining - 1, i - 1, chosen, visit);
            chosen.pop();
            if r.is_break() {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    }
    walk(field, d, e, count - 1, e - 1, &mut chosen, visit).is_continue()
}

/// Classification rows for every pair m ≤ n with m, n ≥ 3 and
/// 2mn + 1 ≤ max_q, sorted by q then m.
pub fn scan_pairs(max_q: u64) -> Vec<PairClass> {
    let mut out = Vec::new();
    let mut m = 3u64;
    while 2 * m * m < max_q {
        let mut n = m;
        while 2 * m * n < max_q {
            out.push(classify_pair(m, n).expect("m, n >= 3"));
            n += 1;
        }
        m += 1;
    }
    out.sort_by_key(|c| (c.q, c.m));
    out
}
