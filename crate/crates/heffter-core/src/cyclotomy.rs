//! Cyclotomic classes C^e_i, subgroups of F_q^*, zero-sum and half-set
//! predicates, set stabilizers, and exact product factorizations.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// Names the cyclotomic class C^e_i = r^i·⟨r^e⟩ for the field's fixed
/// primitive element r. Classes coincide exactly when the indices agree
/// mod e.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CosetSpec {
    pub e: u64,
    pub i: u64,
}

impl CosetSpec {
    pub fn new(e: u64, i: u64) -> CosetSpec {
        CosetSpec { e, i }
    }
}

/// A finite set of nonzero field elements, kept in canonical order
/// (ascending discrete log) for deterministic iteration and equality.
#[derive(Clone)]
pub struct ElementSet {
    field: Arc<Field>,
    /// Sorted by discrete log.
    elems: Vec<FieldElement>,
    /// Sorted by encoding, for membership tests.
    encs: Vec<u32>,
}

impl PartialEq for ElementSet {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.elems == other.elems
    }
}

impl Eq for ElementSet {}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &x) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.field.format_element(x))?;
        }
        Ok(())
    }
}

impl ElementSet {
    /// Builds a set from distinct nonzero elements; duplicates and zero are
    /// rejected rather than silently dropped.
    pub fn new(field: &Arc<Field>, elems: &[FieldElement]) -> Result<ElementSet> {
        if elems.iter().any(|x| x.is_zero()) {
            return Err(Error::InvalidArgument("element sets exclude zero"));
        }
        let mut encs: Vec<u32> = elems.iter().map(|x| x.encoding()).collect();
        encs.sort_unstable();
        if encs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("element sets exclude duplicates"));
        }
        let mut elems = elems.to_vec();
        elems.sort_unstable_by_key(|&x| field.discrete_log(x).expect("nonzero"));
        Ok(ElementSet {
            field: Arc::clone(field),
            elems,
            encs,
        })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Elements in canonical (discrete-log) order.
    pub fn iter(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.elems.iter().copied()
    }

    pub fn elements(&self) -> &[FieldElement] {
        &self.elems
    }

    pub fn contains(&self, x: FieldElement) -> bool {
        self.encs.binary_search(&x.encoding()).is_ok()
    }

    /// The scaled set u·S for a nonzero u.
    pub fn scaled(&self, u: FieldElement) -> Result<ElementSet> {
        if u.is_zero() {
            return Err(Error::InvalidArgument("scaling a set by zero"));
        }
        let elems: Vec<FieldElement> = self.elems.iter().map(|&x| self.field.mul(u, x)).collect();
        ElementSet::new(&self.field, &elems)
    }

    /// True iff the elements sum to zero; vacuously true for the empty set.
    pub fn is_zero_sum(&self) -> bool {
        let mut acc = self.field.zero();
        for &x in &self.elems {
            acc = self.field.add(acc, x);
        }
        acc.is_zero()
    }

    /// True iff |S| = (q-1)/2 and S ∪ −S covers every nonzero element,
    /// i.e. S picks exactly one of {x, −x} for each pair.
    pub fn is_half_set(&self) -> bool {
        if 2 * self.elems.len() as u64 != self.field.order() - 1 {
            return false;
        }
        self.elems.iter().all(|&x| !self.contains(self.field.neg(x)))
    }

    /// The stabilizer {u ∈ F_q^* : u·S = S} under the multiplicative action.
    /// Any stabilizing u must map the first element into the set, so only
    /// the |S| quotients s·s₀⁻¹ need testing.
    pub fn stabilizer(&self) -> Result<ElementSet> {
        if self.is_empty() {
            return Err(Error::InvalidArgument("the empty set has no stabilizer"));
        }
        let f = &self.field;
        let base_inv = f.inv(self.elems[0])?;
        let mut out = Vec::new();
        for &t in &self.elems {
            let u = f.mul(t, base_inv);
            if self.elems.iter().all(|&x| self.contains(f.mul(u, x))) {
                out.push(u);
            }
        }
        ElementSet::new(f, &out)
    }

    /// The product set {a·b : a ∈ self, b ∈ other} when all |self|·|other|
    /// products are pairwise distinct (an exact factorization), `None` when
    /// any two products collide.
    pub fn product_factorization(&self, other: &ElementSet) -> Result<Option<ElementSet>> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.is_empty() || other.is_empty() {
            return Err(Error::InvalidArgument("factorization of an empty set"));
        }
        let f = &self.field;
        let mut seen = alloc::vec![false; f.order() as usize];
        let mut products = Vec::with_capacity(self.len() * other.len());
        for &a in &self.elems {
            for &b in &other.elems {
                let v = f.mul(a, b);
                if seen[v.encoding() as usize] {
                    return Ok(None);
                }
                seen[v.encoding() as usize] = true;
                products.push(v);
            }
        }
        Ok(Some(ElementSet::new(f, &products)?))
    }
}

/// The cyclotomic class C^e_i of index e. Requires e | q−1; the class index
/// is reduced mod e. Cardinality is d = (q−1)/e.
pub fn cyclotomic_class(field: &Arc<Field>, spec: CosetSpec) -> Result<ElementSet> {
    let n = field.order() - 1;
    if spec.e == 0 || !n.is_multiple_of(spec.e) {
        return Err(Error::InvalidIndex);
    }
    let d = n / spec.e;
    let i = spec.i % spec.e;
    let elems: Vec<FieldElement> = (0..d).map(|t| field.exp(i + spec.e * t)).collect();
    ElementSet::new(field, &elems)
}

/// The subgroup of F_q^* of order d, i.e. the class C^{(q−1)/d}_0.
/// Requires d | q−1.
pub fn subgroup_of_order(field: &Arc<Field>, d: u64) -> Result<ElementSet> {
    let n = field.order() - 1;
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::InvalidOrder);
    }
    cyclotomic_class(field, CosetSpec::new(n / d, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::sync::Arc;
    use alloc::vec;

    fn field(p: u64, k: u32) -> Arc<Field> {
        Arc::new(Field::new(p, k, None).unwrap())
    }

    fn set(f: &Arc<Field>, residues: &[i64]) -> ElementSet {
        let elems: Vec<FieldElement> = residues
            .iter()
            .map(|&v| f.element_from_coeffs(&[v]).unwrap())
            .collect();
        ElementSet::new(f, &elems).unwrap()
    }

    fn encodings(s: &ElementSet) -> Vec<u32> {
        let mut v: Vec<u32> = s.iter().map(|x| x.encoding()).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn classes_in_f181() {
        let f = field(181, 1);
        let c0 = cyclotomic_class(&f, CosetSpec::new(60, 0)).unwrap();
        assert_eq!(encodings(&c0), vec![1, 48, 132]);
        let c1 = cyclotomic_class(&f, CosetSpec::new(60, 1)).unwrap();
        assert_eq!(encodings(&c1), vec![2, 83, 96]);
        // Index arithmetic: C^e_i = C^e_j iff i ≡ j (mod e).
        let c61 = cyclotomic_class(&f, CosetSpec::new(60, 61)).unwrap();
        assert_eq!(c61, c1);
        let trivial = cyclotomic_class(&f, CosetSpec::new(180, 0)).unwrap();
        assert_eq!(encodings(&trivial), vec![1]);
        assert_eq!(
            cyclotomic_class(&f, CosetSpec::new(7, 0)).unwrap_err(),
            Error::InvalidIndex
        );
    }

    #[test]
    fn subgroups_match_reference_values() {
        let f31 = field(31, 1);
        assert_eq!(encodings(&subgroup_of_order(&f31, 3).unwrap()), vec![1, 5, 25]);
        assert_eq!(encodings(&subgroup_of_order(&f31, 5).unwrap()), vec![1, 2, 4, 8, 16]);
        let f19 = field(19, 1);
        assert_eq!(encodings(&subgroup_of_order(&f19, 3).unwrap()), vec![1, 7, 11]);
        assert_eq!(subgroup_of_order(&f19, 4).unwrap_err(), Error::InvalidOrder);
    }

    #[test]
    fn zero_sum_examples() {
        let f181 = field(181, 1);
        assert!(set(&f181, &[1, 48, 132]).is_zero_sum());
        let f19 = field(19, 1);
        assert!(set(&f19, &[1, 3, 15]).is_zero_sum());
        assert!(!set(&f19, &[1]).is_zero_sum());
        let empty = ElementSet::new(&f19, &[]).unwrap();
        assert!(empty.is_zero_sum());
    }

    #[test]
    fn half_set_examples() {
        let f19 = field(19, 1);
        assert!(set(&f19, &[1, 4, 5, 6, 7, 9, 11, 16, 17]).is_half_set());
        assert!(!set(&f19, &[1, 18, 3]).is_half_set());
        assert!(!set(&f19, &[1, 3, 15]).is_half_set());
        let f5 = field(5, 1);
        assert!(set(&f5, &[1, 2]).is_half_set());
    }

    #[test]
    fn stabilizer_examples() {
        let f19 = field(19, 1);
        assert_eq!(encodings(&set(&f19, &[1, 3, 15]).stabilizer().unwrap()), vec![1]);

        let f181 = field(181, 1);
        let x = set(&f181, &[1, 48, 132, 2, 96, 83]);
        assert_eq!(encodings(&x.stabilizer().unwrap()), vec![1, 48, 132]);

        let f31 = field(31, 1);
        let y = subgroup_of_order(&f31, 5).unwrap();
        assert_eq!(y.stabilizer().unwrap(), y);

        let empty = ElementSet::new(&f19, &[]).unwrap();
        assert!(empty.stabilizer().is_err());
    }

    #[test]
    fn stabilizer_agrees_with_full_scan() {
        let f = field(19, 1);
        let sets = [
            set(&f, &[1, 3, 15]),
            set(&f, &[1, 7, 11]),
            set(&f, &[2, 14, 3]),
            set(&f, &[1, 4, 5, 6, 7, 9, 11, 16, 17]),
        ];
        for s in &sets {
            let brute: Vec<FieldElement> = f
                .units()
                .filter(|&u| s.iter().all(|x| s.contains(f.mul(u, x))))
                .collect();
            let brute = ElementSet::new(&f, &brute).unwrap();
            assert_eq!(s.stabilizer().unwrap(), brute);
        }
    }

    #[test]
    fn product_factorization_examples() {
        let f19 = field(19, 1);
        let x = set(&f19, &[1, 7, 11]);
        let y = set(&f19, &[1, 3, 15]);
        let product = x.product_factorization(&y).unwrap().unwrap();
        assert_eq!(encodings(&product), vec![1, 2, 3, 7, 10, 11, 13, 14, 15]);
        assert!(product.is_half_set());

        // A subgroup times itself collides.
        assert_eq!(x.product_factorization(&x).unwrap(), None);

        let f31 = field(31, 1);
        let a = subgroup_of_order(&f31, 3).unwrap();
        let b = subgroup_of_order(&f31, 5).unwrap();
        let squares = a.product_factorization(&b).unwrap().unwrap();
        assert_eq!(squares, subgroup_of_order(&f31, 15).unwrap());

        let f19b = field(19, 1);
        let other = set(&f19b, &[1, 2]);
        assert!(x.product_factorization(&other).is_ok());
        let f23 = field(23, 1);
        let alien = set(&f23, &[1, 2]);
        assert_eq!(x.product_factorization(&alien).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn set_construction_rejects_zero_and_duplicates() {
        let f = field(19, 1);
        let zero = f.zero();
        let one = f.one();
        assert!(ElementSet::new(&f, &[one, zero]).is_err());
        assert!(ElementSet::new(&f, &[one, one]).is_err());
    }

    #[test]
    fn canonical_order_is_by_discrete_log() {
        let f = field(31, 1);
        let s = subgroup_of_order(&f, 5).unwrap();
        // r = 3; subgroup of order 5 in log order: 1, 3^6=16, 3^12=8, 3^18=4, 3^24=2.
        let order: Vec<u32> = s.iter().map(|x| x.encoding()).collect();
        assert_eq!(order, vec![1, 16, 8, 4, 2]);
        assert_eq!(alloc::format!("{s}"), "1, 16, 8, 4, 2");
    }
}
