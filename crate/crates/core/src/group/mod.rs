//! Finite groups as complete multiplication tables.
//!
//! Every group is built by closing a generating set under right
//! multiplication, breadth first from the identity. Element ids are the
//! discovery order, so id 0 is the identity and rebuilding the same
//! [`GroupSpec`] always yields the same table.

mod automorphism;
mod element;
mod perm;
mod projective;
mod spec;

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use thiserror::Error;

pub use automorphism::{extend_pair_map, Automorphism, PairExtender, PairMap};
pub use element::{Element, FactorKind};
pub use perm::Permutation;
pub use projective::{is_prime, ProjMatrix};
pub use spec::GroupSpec;

pub type ElementId = u32;

pub const DEFAULT_ORDER_CAP: usize = 2000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order exceeds the cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("matrix [[{},{}],[{},{}]] is not invertible mod {p}", .entries[0], .entries[1], .entries[2], .entries[3])]
    SingularMatrix { p: u32, entries: [i64; 4] },
    #[error("elements {0} and {1} do not generate the group")]
    NotGenerating(ElementId, ElementId),
    #[error("element id {0} out of range")]
    InvalidElement(ElementId),
    #[error("multiplication table check failed: {0}")]
    TableCheck(String),
}

/// A finite group with a dense multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    spec: GroupSpec,
    order: usize,
    table: Vec<ElementId>,
    inverses: Vec<ElementId>,
    orders: Vec<u32>,
    generators: Vec<ElementId>,
    elements: Vec<Element>,
    index: HashMap<Element, ElementId>,
    factors: Vec<FactorKind>,
}

/// Result of closing a generating set: elements in discovery order plus,
/// for every generator, the right-multiplication map on ids.
struct Closure<T> {
    elements: Vec<T>,
    parents: Vec<(ElementId, usize)>,
    right: Vec<Vec<ElementId>>,
}

fn close<T, F>(identity: T, gens: &[T], mul: F, cap: usize) -> Result<Closure<T>, GroupError>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<T, ElementId> = HashMap::new();
    index.insert(identity, 0);
    let mut parents = vec![(0, usize::MAX)];
    let mut right: Vec<Vec<ElementId>> = vec![Vec::new(); gens.len()];
    let mut queue = VecDeque::from([0 as ElementId]);
    while let Some(x) = queue.pop_front() {
        for (k, g) in gens.iter().enumerate() {
            let y = mul(&elements[x as usize], g);
            let id = match index.get(&y) {
                Some(&id) => id,
                None => {
                    let id = elements.len() as ElementId;
                    if elements.len() >= cap {
                        return Err(GroupError::OrderCapExceeded { cap });
                    }
                    index.insert(y.clone(), id);
                    elements.push(y);
                    parents.push((x, k));
                    queue.push_back(id);
                    id
                }
            };
            let r = &mut right[k];
            if r.len() <= x as usize {
                r.resize(x as usize + 1, 0);
            }
            r[x as usize] = id;
        }
    }
    Ok(Closure { elements, parents, right })
}

fn check_n(cond: bool, what: &str) -> Result<(), GroupError> {
    if cond {
        Ok(())
    } else {
        Err(GroupError::InvalidSpec(what.to_string()))
    }
}

fn check_prime(p: u32) -> Result<(), GroupError> {
    check_n(is_prime(p as u64), &format!("{p} is not prime"))
}

fn cycle_perm(degree: usize, points: impl IntoIterator<Item = u32>) -> Permutation {
    let cycle: Vec<u32> = points.into_iter().collect();
    Permutation::from_cycles(degree, &[cycle]).expect("valid cycle")
}

impl FiniteGroup {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub const fn identity(&self) -> ElementId {
        0
    }

    /// Generators used for construction (and for conjugation moves).
    pub fn generators(&self) -> &[ElementId] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        self.inverses[a as usize]
    }

    /// `g a g⁻¹`
    pub fn conj(&self, g: ElementId, a: ElementId) -> ElementId {
        self.mul(self.mul(g, a), self.inv(g))
    }

    /// `a b a⁻¹ b⁻¹`
    pub fn commutator(&self, a: ElementId, b: ElementId) -> ElementId {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn pow(&self, a: ElementId, exp: i64) -> ElementId {
        let ord = self.element_order(a) as i64;
        let e = exp.rem_euclid(ord);
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }

    /// Smallest `k ≥ 1` with `gᵏ = 1`.
    #[inline]
    pub fn element_order(&self, g: ElementId) -> u32 {
        self.orders[g as usize]
    }

    pub fn is_valid(&self, g: ElementId) -> bool {
        (g as usize) < self.order
    }

    pub fn element(&self, g: ElementId) -> &Element {
        &self.elements[g as usize]
    }

    pub fn name(&self, g: ElementId) -> String {
        self.elements[g as usize].to_string()
    }

    pub fn lookup(&self, element: &Element) -> Option<ElementId> {
        self.index.get(element).copied()
    }

    pub fn factor_kinds(&self) -> &[FactorKind] {
        &self.factors
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter().all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Size of the subgroup generated by `gens`.
    pub fn closure_size(&self, gens: &[ElementId]) -> usize {
        let n = self.order;
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0 as ElementId];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    }

    /// Whether `a` and `b` generate the whole group.
    pub fn generates(&self, a: ElementId, b: ElementId) -> bool {
        let n = self.order;
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0 as ElementId];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for g in [a, b] {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    count += 1;
                    // a subgroup larger than half the group is the group
                    if 2 * count > n {
                        return true;
                    }
                    stack.push(y);
                }
            }
        }
        count == n
    }

    /// Exhaustive group-law check (identity, inverses, Latin square,
    /// associativity). Cubic in the order; intended for tests.
    pub fn verify_exhaustive(&self) -> Result<(), GroupError> {
        self.verify_basic()?;
        let n = self.order as ElementId;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::TableCheck(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")));
                    }
                }
            }
        }
        Ok(())
    }

    fn verify_basic(&self) -> Result<(), GroupError> {
        let n = self.order;
        for a in 0..n as ElementId {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(GroupError::TableCheck(format!("identity fails on {a}")));
            }
            let ia = self.inv(a);
            if self.mul(a, ia) != 0 || self.mul(ia, a) != 0 {
                return Err(GroupError::TableCheck(format!("inverse fails on {a}")));
            }
        }
        let mut row_seen = vec![0usize; n];
        let mut col_seen = vec![0usize; n];
        for a in 0..n {
            for b in 0..n {
                let r = self.table[a * n + b] as usize;
                let c = self.table[b * n + a] as usize;
                if row_seen[r] == a + 1 || col_seen[c] == a + 1 {
                    return Err(GroupError::TableCheck(format!("row or column {a} repeats an entry")));
                }
                row_seen[r] = a + 1;
                col_seen[c] = a + 1;
            }
        }
        Ok(())
    }

    /// Associativity against every generator in the last slot; together with
    /// the Latin-square check this is what `build_group` certifies.
    fn verify_generator_associativity(&self) -> Result<(), GroupError> {
        let n = self.order as ElementId;
        for &g in &self.generators {
            for a in 0..n {
                for b in 0..n {
                    if self.mul(self.mul(a, b), g) != self.mul(a, self.mul(b, g)) {
                        return Err(GroupError::TableCheck(format!("({a}·{b})·{g} ≠ {a}·({b}·{g})")));
                    }
                }
            }
        }
        Ok(())
    }

    fn from_closure<T>(
        spec: GroupSpec,
        closure: Closure<T>,
        gens: Vec<ElementId>,
        to_element: impl Fn(&T) -> Element,
        factors: Vec<FactorKind>,
    ) -> Result<Self, GroupError> {
        let n = closure.elements.len();
        let mut table = vec![0 as ElementId; n * n];
        for i in 0..n {
            let row = &mut table[i * n..(i + 1) * n];
            row[0] = i as ElementId;
            for j in 1..n {
                let (parent, k) = closure.parents[j];
                row[j] = closure.right[k][row[parent as usize] as usize];
            }
        }
        let mut inverses = vec![0; n];
        for i in 0..n {
            let row = &table[i * n..(i + 1) * n];
            let j = row
                .iter()
                .position(|&x| x == 0)
                .ok_or_else(|| GroupError::TableCheck(format!("element {i} has no inverse")))?;
            inverses[i] = j as ElementId;
        }
        let mut orders = vec![0u32; n];
        for i in 0..n {
            let mut k = 1;
            let mut x = i as ElementId;
            while x != 0 {
                x = table[x as usize * n + i];
                k += 1;
            }
            orders[i] = k;
        }
        let elements: Vec<Element> = closure.elements.iter().map(to_element).collect();
        let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i as ElementId)).collect();
        let group = FiniteGroup {
            spec,
            order: n,
            table,
            inverses,
            orders,
            generators: gens,
            elements,
            index,
            factors,
        };
        group.verify_basic()?;
        group.verify_generator_associativity()?;
        Ok(group)
    }

    fn from_elements<T, F>(
        spec: GroupSpec,
        identity: T,
        gens: Vec<T>,
        mul: F,
        to_element: impl Fn(&T) -> Element,
        factor: FactorKind,
        cap: usize,
    ) -> Result<Self, GroupError>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let closure = close(identity, &gens, mul, cap)?;
        let index: HashMap<&T, ElementId> =
            closure.elements.iter().enumerate().map(|(i, e)| (e, i as ElementId)).collect();
        let mut gen_ids: Vec<ElementId> = gens.iter().map(|g| index[g]).collect();
        gen_ids.dedup();
        Self::from_closure(spec, closure, gen_ids, to_element, vec![factor])
    }

    fn direct_product(spec: GroupSpec, a: FiniteGroup, b: FiniteGroup, cap: usize) -> Result<Self, GroupError> {
        if a.order * b.order > cap {
            return Err(GroupError::OrderCapExceeded { cap });
        }
        let mut gens: Vec<(ElementId, ElementId)> = a.generators.iter().map(|&g| (g, 0)).collect();
        gens.extend(b.generators.iter().map(|&h| (0, h)));
        gens.retain(|&g| g != (0, 0));
        let closure = close((0, 0), &gens, |x, y| (a.mul(x.0, y.0), b.mul(x.1, y.1)), cap)?;
        let index: HashMap<&(ElementId, ElementId), ElementId> =
            closure.elements.iter().enumerate().map(|(i, e)| (e, i as ElementId)).collect();
        let gen_ids = gens.iter().map(|g| index[g]).collect();
        let mut factors = a.factors.clone();
        factors.extend(b.factors.iter().copied());
        Self::from_closure(
            spec,
            closure,
            gen_ids,
            |&(x, y)| {
                let mut items = a.element(x).flatten();
                items.extend(b.element(y).flatten());
                Element::Tuple(items)
            },
            factors,
        )
    }
}

/// Builds a group with the default order cap of 2000.
pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup, GroupError> {
    build_group_with_cap(spec, DEFAULT_ORDER_CAP)
}

pub fn build_group_with_cap(spec: &GroupSpec, cap: usize) -> Result<FiniteGroup, GroupError> {
    let s = spec.clone();
    match *spec {
        GroupSpec::Cyclic(n) => {
            check_n(n >= 1, "cyclic group needs n ≥ 1")?;
            let gens = if n == 1 { vec![] } else { vec![1u32] };
            FiniteGroup::from_elements(
                s,
                0u32,
                gens,
                |x, y| (x + y) % n,
                |&v| Element::Residue { value: v, modulus: n },
                FactorKind::Residue(n),
                cap,
            )
        }
        GroupSpec::Dihedral(1) => FiniteGroup::from_elements(
            s,
            0u32,
            vec![1],
            |x, y| (x + y) % 2,
            |&v| Element::Residue { value: v, modulus: 2 },
            FactorKind::Residue(2),
            cap,
        ),
        GroupSpec::Dihedral(2) => FiniteGroup::from_elements(
            s,
            0u8,
            vec![1, 2],
            |x, y| x ^ y,
            |&v| Element::Klein(v),
            FactorKind::Klein,
            cap,
        ),
        GroupSpec::Dihedral(n) => {
            check_n(n >= 1, "dihedral group needs n ≥ 1")?;
            let deg = n as usize;
            let rotation = cycle_perm(deg, 1..=n);
            let reflection = Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).expect("reflection");
            perm_group(s, vec![rotation, reflection], cap)
        }
        GroupSpec::Alternating(n) => {
            check_n(n >= 3, "alternating group needs n ≥ 3")?;
            let deg = n as usize;
            let mut gens = vec![cycle_perm(deg, [1, 2, 3])];
            if n > 3 {
                if n % 2 == 1 {
                    gens.push(cycle_perm(deg, 1..=n));
                } else {
                    gens.push(cycle_perm(deg, 2..=n));
                }
            }
            perm_group(s, gens, cap)
        }
        GroupSpec::Symmetric(n) => {
            check_n(n >= 3, "symmetric group needs n ≥ 3")?;
            let deg = n as usize;
            perm_group(s, vec![cycle_perm(deg, [1, 2]), cycle_perm(deg, 1..=n)], cap)
        }
        GroupSpec::Psl2(p) => {
            check_prime(p)?;
            let m = p as i64;
            let gens = vec![
                ProjMatrix::new(p, [0, m - 1, 1, 0]).expect("S"),
                ProjMatrix::new(p, [1, 1, 0, 1]).expect("T"),
            ];
            matrix_group(s, p, gens, cap)
        }
        GroupSpec::ProjMatGens { p, ref matrices } => {
            check_prime(p)?;
            let mut gens = Vec::new();
            for &entries in matrices {
                gens.push(ProjMatrix::new(p, entries).ok_or(GroupError::SingularMatrix { p, entries })?);
            }
            matrix_group(s, p, gens, cap)
        }
        GroupSpec::PermGens(ref perms) => {
            check_n(!perms.is_empty(), "permutation group needs at least one generator")?;
            let deg = perms.iter().map(Permutation::degree).max().unwrap_or(1);
            let gens = perms.iter().map(|p| p.padded(deg)).collect();
            perm_group(s, gens, cap)
        }
        GroupSpec::DirectProduct(ref a, ref b) => {
            let ga = build_group_with_cap(a, cap)?;
            let gb = build_group_with_cap(b, cap)?;
            FiniteGroup::direct_product(s, ga, gb, cap)
        }
    }
}

fn perm_group(spec: GroupSpec, gens: Vec<Permutation>, cap: usize) -> Result<FiniteGroup, GroupError> {
    let deg = gens[0].degree();
    FiniteGroup::from_elements(
        spec,
        Permutation::identity(deg),
        gens,
        |x, y| x.compose(y),
        |p| Element::Perm(p.clone()),
        FactorKind::Perm(deg),
        cap,
    )
}

fn matrix_group(spec: GroupSpec, p: u32, gens: Vec<ProjMatrix>, cap: usize) -> Result<FiniteGroup, GroupError> {
    FiniteGroup::from_elements(
        spec,
        ProjMatrix::identity(p),
        gens,
        |x, y| x.mul(y),
        |m| Element::Matrix(*m),
        FactorKind::Matrix(p),
        cap,
    )
}
