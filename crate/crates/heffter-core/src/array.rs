//! The Heffter array type and its verification procedures: the defining
//! axioms, rank-one factor extraction, multiplier groups (stabilizer-based
//! and brute force), global simplicity, permutation equivalence, and
//! isomorphism over prime fields.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::cyclotomy::ElementSet;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// An m×n matrix over F_q with q = 2mn+1, m, n ≥ 3.
///
/// The type holds *candidates*: dimensions are enforced at construction, but
/// entries may be zero or repeated so that [`HeffterArray::verify`] can
/// report such defects as half-set failures rather than refuse to look.
#[derive(Clone)]
pub struct HeffterArray {
    field: Arc<Field>,
    m: usize,
    n: usize,
    /// Row-major, length m·n.
    entries: Vec<FieldElement>,
}

impl PartialEq for HeffterArray {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.m == other.m
            && self.n == other.n
            && self.entries == other.entries
    }
}

impl Eq for HeffterArray {}

impl core::fmt::Debug for HeffterArray {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        writeln!(f, "HeffterArray {}x{} over {}", self.m, self.n, self.field)?;
        for i in 0..self.m {
            for (j, &x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.field.format_element(x))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl HeffterArray {
    /// Wraps a row-major entry matrix. Rejects m < 3 or n < 3 and any field
    /// whose order is not 2mn+1.
    pub fn new(
        field: &Arc<Field>,
        m: usize,
        n: usize,
        entries: Vec<FieldElement>,
    ) -> Result<HeffterArray> {
        if m < 3 || n < 3 {
            return Err(Error::InvalidArgument("both m and n must be greater than 2"));
        }
        if field.order() != 2 * (m as u64) * (n as u64) + 1 {
            return Err(Error::DimensionMismatch);
        }
        if entries.len() != m * n {
            return Err(Error::DimensionMismatch);
        }
        Ok(HeffterArray {
            field: Arc::clone(field),
            m,
            n,
            entries,
        })
    }

    /// The rank-one array [x_i · y_j] built from ordered factor lists.
    pub fn from_factors(
        field: &Arc<Field>,
        x: &[FieldElement],
        y: &[FieldElement],
    ) -> Result<HeffterArray> {
        let mut entries = Vec::with_capacity(x.len() * y.len());
        for &xi in x {
            for &yj in y {
                entries.push(field.mul(xi, yj));
            }
        }
        HeffterArray::new(field, x.len(), y.len(), entries)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry a_{i,j} with 0-based indices.
    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.m).map(|i| self.entry(i, j)).collect()
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    /// The scaled array u·A for a nonzero u.
    pub fn scaled(&self, u: FieldElement) -> Result<HeffterArray> {
        if u.is_zero() {
            return Err(Error::InvalidArgument("scaling an array by zero"));
        }
        let entries = self.entries.iter().map(|&x| self.field.mul(u, x)).collect();
        Ok(HeffterArray {
            field: Arc::clone(&self.field),
            m: self.m,
            n: self.n,
            entries,
        })
    }

    pub fn transposed(&self) -> HeffterArray {
        let mut entries = Vec::with_capacity(self.m * self.n);
        for j in 0..self.n {
            for i in 0..self.m {
                entries.push(self.entry(i, j));
            }
        }
        HeffterArray {
            field: Arc::clone(&self.field),
            m: self.n,
            n: self.m,
            entries,
        }
    }

    /// Runs every check of [`VerificationReport`]: the Heffter axioms
    /// (half-set entries, zero-sum rows and columns), rank one, and global
    /// simplicity in full mode.
    pub fn verify(&self) -> VerificationReport {
        let f = &self.field;
        let mut failures = Vec::new();

        // Half-set: entries distinct, nonzero, one of each {x, −x} pair.
        let mut half_set = true;
        let q = f.order() as usize;
        let mut first_at = vec![usize::MAX; q];
        for (pos, &x) in self.entries.iter().enumerate() {
            if x.is_zero() {
                half_set = false;
                failures.push(CheckFailure::new(
                    Check::HalfSet,
                    format!("zero entry at {}", self.cell(pos)),
                ));
                break;
            }
            let enc = x.encoding() as usize;
            if first_at[enc] != usize::MAX {
                half_set = false;
                failures.push(CheckFailure::new(
                    Check::HalfSet,
                    format!(
                        "entry {} repeated at {} and {}",
                        f.format_element(x),
                        self.cell(first_at[enc]),
                        self.cell(pos)
                    ),
                ));
                break;
            }
            first_at[enc] = pos;
        }
        if half_set {
            for (pos, &x) in self.entries.iter().enumerate() {
                let neg = f.neg(x);
                let other = first_at[neg.encoding() as usize];
                if other != usize::MAX {
                    half_set = false;
                    failures.push(CheckFailure::new(
                        Check::HalfSet,
                        format!(
                            "entries {} at {} and {} at {} are negatives of each other",
                            f.format_element(x),
                            self.cell(pos),
                            f.format_element(neg),
                            self.cell(other)
                        ),
                    ));
                    break;
                }
            }
        }

        let mut rows_zero_sum = true;
        for i in 0..self.m {
            if !line_sum_is_zero(f, self.row(i)) {
                rows_zero_sum = false;
                failures.push(CheckFailure::new(
                    Check::RowsZeroSum,
                    format!("row {} is not zero-sum", i + 1),
                ));
                break;
            }
        }

        let mut cols_zero_sum = true;
        for j in 0..self.n {
            if !line_sum_is_zero(f, &self.column(j)) {
                cols_zero_sum = false;
                failures.push(CheckFailure::new(
                    Check::ColsZeroSum,
                    format!("column {} is not zero-sum", j + 1),
                ));
                break;
            }
        }

        let rank_one = match self.rank_one_offender() {
            None => true,
            Some(i) => {
                failures.push(CheckFailure::new(
                    Check::RankOne,
                    format!("row {} is not a multiple of row 1", i + 1),
                ));
                false
            }
        };

        let mut globally_simple = true;
        'simple: {
            for i in 0..self.m {
                if !line_is_simple(f, self.row(i)) {
                    globally_simple = false;
                    failures.push(CheckFailure::new(
                        Check::GloballySimple,
                        format!("row {} has repeated partial sums", i + 1),
                    ));
                    break 'simple;
                }
            }
            for j in 0..self.n {
                if !line_is_simple(f, &self.column(j)) {
                    globally_simple = false;
                    failures.push(CheckFailure::new(
                        Check::GloballySimple,
                        format!("column {} has repeated partial sums", j + 1),
                    ));
                    break 'simple;
                }
            }
        }

        VerificationReport {
            half_set,
            rows_zero_sum,
            cols_zero_sum,
            rank_one,
            globally_simple,
            failures,
        }
    }

    fn cell(&self, pos: usize) -> String {
        format!("({},{})", pos / self.n + 1, pos % self.n + 1)
    }

    /// First row that is not a scalar multiple of row 1, if any.
    fn rank_one_offender(&self) -> Option<usize> {
        (1..self.m).find(|&i| self.row_ratio(i).is_none())
    }

    /// The scalar ρ with row_i = ρ·row_1, when it exists.
    fn row_ratio(&self, i: usize) -> Option<FieldElement> {
        let f = &self.field;
        let first = self.row(0);
        let row = self.row(i);
        let ratio = match (0..self.n).find(|&j| !first[j].is_zero()) {
            Some(j) => f.div(row[j], first[j]).expect("nonzero divisor"),
            // Row 1 is all zero: only the zero row is a multiple of it.
            None => {
                return row.iter().all(|x| x.is_zero()).then(|| f.one());
            }
        };
        (0..self.n)
            .all(|j| row[j] == f.mul(ratio, first[j]))
            .then_some(ratio)
    }

    /// Factors (x_1..x_m), (y_1..y_n) with a_{i,j} = x_i·y_j, normalized so
    /// that x_1 = 1 and y is row 1 verbatim; `None` unless every row is a
    /// scalar multiple of row 1. The factorization is unique up to scaling
    /// (cX, c⁻¹Y); the normalization fixes the representative.
    pub fn rank_one_factors(&self) -> Option<RankOneFactors> {
        let mut x = Vec::with_capacity(self.m);
        x.push(self.field.one());
        for i in 1..self.m {
            x.push(self.row_ratio(i)?);
        }
        Some(RankOneFactors {
            field: Arc::clone(&self.field),
            x,
            y: self.row(0).to_vec(),
        })
    }

    /// True iff some row permutation π and column permutation ψ give
    /// b_{i,j} = a_{π(i),ψ(j)}. Dimension or field mismatch is `false`, not
    /// an error. Rows are matched by sorted-row signature first; ties are
    /// resolved by backtracking, and the column permutation then reduces to
    /// a multiset comparison of whole columns.
    pub fn perm_equivalent(&self, other: &HeffterArray) -> bool {
        if self.m != other.m || self.n != other.n || self.field != other.field {
            return false;
        }
        let signature = |row: &[FieldElement]| {
            let mut sig: Vec<u32> = row.iter().map(|x| x.encoding()).collect();
            sig.sort_unstable();
            sig
        };
        let a_sigs: Vec<Vec<u32>> = (0..self.m).map(|i| signature(self.row(i))).collect();
        let b_sigs: Vec<Vec<u32>> = (0..self.m).map(|i| signature(other.row(i))).collect();

        // Candidate a-rows for each b-row, cheapest-first to cut the
        // backtracking fan-out.
        let mut candidates: Vec<(usize, Vec<usize>)> = (0..self.m)
            .map(|bi| {
                let list = (0..self.m).filter(|&ai| a_sigs[ai] == b_sigs[bi]).collect::<Vec<_>>();
                (bi, list)
            })
            .collect();
        if candidates.iter().any(|(_, list)| list.is_empty()) {
            return false;
        }
        candidates.sort_by_key(|(_, list)| list.len());

        let mut assignment = vec![usize::MAX; self.m];
        let mut used = vec![false; self.m];
        self.match_rows(other, &candidates, 0, &mut assignment, &mut used)
    }

    fn match_rows(
        &self,
        other: &HeffterArray,
        candidates: &[(usize, Vec<usize>)],
        depth: usize,
        assignment: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == candidates.len() {
            return self.columns_match(other, assignment);
        }
        let (bi, ref list) = candidates[depth];
        for &ai in list {
            if used[ai] {
                continue;
            }
            used[ai] = true;
            assignment[bi] = ai;
            if self.match_rows(other, candidates, depth + 1, assignment, used) {
                return true;
            }
            used[ai] = false;
            assignment[bi] = usize::MAX;
        }
        false
    }

    /// With rows of `self` reordered by `assignment`, do the columns of the
    /// two matrices agree as a multiset of full column vectors?
    fn columns_match(&self, other: &HeffterArray, assignment: &[usize]) -> bool {
        let column_of = |source: &HeffterArray, perm: Option<&[usize]>, j: usize| {
            (0..self.m)
                .map(|i| source.entry(perm.map_or(i, |p| p[i]), j).encoding())
                .collect::<Vec<u32>>()
        };
        let mut a_cols: Vec<Vec<u32>> =
            (0..self.n).map(|j| column_of(self, Some(assignment), j)).collect();
        let mut b_cols: Vec<Vec<u32>> = (0..self.n).map(|j| column_of(other, None, j)).collect();
        a_cols.sort_unstable();
        b_cols.sort_unstable();
        a_cols == b_cols
    }

    /// The full multiplier group by definition: every unit u with u·A (or
    /// u·Aᵀ when the array is square) obtainable from A by row and column
    /// permutations. Candidates that do not even preserve the entry set are
    /// discarded before any permutation matching.
    pub fn multiplier_group_brute(&self) -> MultiplierGroup {
        let f = &self.field;
        let mut present = vec![false; f.order() as usize];
        for &x in &self.entries {
            present[x.encoding() as usize] = true;
        }
        let preserves_entries = |u: FieldElement| {
            self.entries.iter().all(|&x| present[f.mul(u, x).encoding() as usize])
        };
        let mut multipliers = Vec::new();
        for u in f.units() {
            if !preserves_entries(u) {
                continue;
            }
            let scaled = self.scaled(u).expect("unit is nonzero");
            if scaled.perm_equivalent(self)
                || (self.m == self.n && scaled.transposed().perm_equivalent(self))
            {
                multipliers.push(u);
            }
        }
        MultiplierGroup {
            elements: ElementSet::new(f, &multipliers).expect("units are distinct and nonzero"),
            s_part: None,
            t_part: None,
        }
    }

    /// The multiplier group of a rank-one array as the product S·T of the
    /// stabilizers of its factor sets. Errors with [`Error::NotRankOne`]
    /// when the array has no rank-one factorization.
    pub fn multiplier_group_rank_one(&self) -> Result<MultiplierGroup> {
        let factors = self.rank_one_factors().ok_or(Error::NotRankOne)?;
        let s = factors.x_set()?.stabilizer()?;
        let t = factors.y_set()?.stabilizer()?;
        let f = &self.field;
        let mut seen = vec![false; f.order() as usize];
        let mut product = Vec::new();
        for a in s.iter() {
            for b in t.iter() {
                let v = f.mul(a, b);
                if !seen[v.encoding() as usize] {
                    seen[v.encoding() as usize] = true;
                    product.push(v);
                }
            }
        }
        Ok(MultiplierGroup {
            elements: ElementSet::new(f, &product)?,
            s_part: Some(s),
            t_part: Some(t),
        })
    }

    /// Global simplicity: pairwise distinct partial sums along lines.
    /// `Full` checks all m rows and n columns. `Fast` checks only row 1 and
    /// column 1, which decides the property exactly for rank-one arrays
    /// (every other line is a scalar multiple); it is an error otherwise.
    pub fn is_globally_simple(&self, mode: SimplicityMode) -> Result<bool> {
        let f = &self.field;
        match mode {
            SimplicityMode::Fast => {
                if self.rank_one_offender().is_some() {
                    return Err(Error::NotRankOne);
                }
                Ok(line_is_simple(f, self.row(0)) && line_is_simple(f, &self.column(0)))
            }
            SimplicityMode::Full => Ok((0..self.m).all(|i| line_is_simple(f, self.row(i)))
                && (0..self.n).all(|j| line_is_simple(f, &self.column(j)))),
        }
    }

    /// Isomorphism over a prime field: true iff some unit u makes u·A or
    /// u·Aᵀ a row/column permutation of B. Complete for k = 1, where every
    /// automorphism of the additive group is multiplication by a unit.
    pub fn is_isomorphic_prime(&self, other: &HeffterArray) -> Result<bool> {
        if self.field.k() != 1 || other.field.k() != 1 {
            return Err(Error::UnsupportedField);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        for u in self.field.units() {
            let scaled = self.scaled(u).expect("unit is nonzero");
            if scaled.perm_equivalent(other) || scaled.transposed().perm_equivalent(other) {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn line_sum_is_zero(f: &Field, line: &[FieldElement]) -> bool {
    line.iter().fold(f.zero(), |acc, &x| f.add(acc, x)).is_zero()
}

fn line_is_simple(f: &Field, line: &[FieldElement]) -> bool {
    let mut sums: Vec<u32> = partial_sums(f, line).iter().map(|x| x.encoding()).collect();
    sums.sort_unstable();
    sums.windows(2).all(|w| w[0] != w[1])
}

/// Prefix sums of a line; the last element is the total line sum.
pub fn partial_sums(f: &Field, line: &[FieldElement]) -> Vec<FieldElement> {
    let mut out = Vec::with_capacity(line.len());
    let mut acc = f.zero();
    for &x in line {
        acc = f.add(acc, x);
        out.push(acc);
    }
    out
}

/// Outcome of [`HeffterArray::verify`]. The array is a Heffter array
/// exactly when `half_set`, `rows_zero_sum` and `cols_zero_sum` all hold;
/// `rank_one` and `globally_simple` report the extra structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub half_set: bool,
    pub rows_zero_sum: bool,
    pub cols_zero_sum: bool,
    pub rank_one: bool,
    pub globally_simple: bool,
    /// First offending location per failed check, 1-based.
    pub failures: Vec<CheckFailure>,
}

impl VerificationReport {
    pub fn is_heffter(&self) -> bool {
        self.half_set && self.rows_zero_sum && self.cols_zero_sum
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    HalfSet,
    RowsZeroSum,
    ColsZeroSum,
    RankOne,
    GloballySimple,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::HalfSet => "half_set",
            Check::RowsZeroSum => "rows_zero_sum",
            Check::ColsZeroSum => "cols_zero_sum",
            Check::RankOne => "rank_one",
            Check::GloballySimple => "globally_simple",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckFailure {
    pub check: Check,
    pub location: String,
}

impl CheckFailure {
    fn new(check: Check, location: String) -> CheckFailure {
        CheckFailure { check, location }
    }
}

/// Ordered factor lists of a rank-one array, normalized with x_1 = 1.
/// When the array is a Heffter array both underlying sets are zero-sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOneFactors {
    field: Arc<Field>,
    pub x: Vec<FieldElement>,
    pub y: Vec<FieldElement>,
}

impl RankOneFactors {
    pub fn x_set(&self) -> Result<ElementSet> {
        ElementSet::new(&self.field, &self.x)
    }

    pub fn y_set(&self) -> Result<ElementSet> {
        ElementSet::new(&self.field, &self.y)
    }
}

/// The multiplier group M of an array. For the stabilizer route, `s_part`
/// and `t_part` record the stabilizers S and T of the factor sets with
/// M = S·T; the brute-force route leaves them empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierGroup {
    pub elements: ElementSet,
    pub s_part: Option<ElementSet>,
    pub t_part: Option<ElementSet>,
}

impl MultiplierGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Mode for [`HeffterArray::is_globally_simple`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplicityMode {
    Full,
    Fast,
}
