//! Finite groups stored as dense multiplication tables, and their conjugacy classes.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

/// Default upper bound on the order of any constructed group.
pub const DEFAULT_ORDER_CAP: usize = 5040;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("MalformedTable: {0}")]
    MalformedTable(String),
    #[error("NoIdentity: no element acts as a two-sided identity")]
    NoIdentity,
    #[error("NotLatinSquare: {line} {index} repeats element {element}")]
    NotLatinSquare { line: &'static str, index: usize, element: usize },
    #[error("NoInverse: element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("NotAssociative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("InvalidPermutation: generator {index} is not a permutation of 0..{degree}")]
    InvalidPermutation { index: usize, degree: usize },
    #[error("ClosureTooLarge: generated group exceeds order cap {cap}")]
    ClosureTooLarge { cap: usize },
    #[error("UnknownName: {0}")]
    UnknownName(String),
    #[error("ParameterTooLarge: {name}({param}) exceeds the cap {cap}")]
    ParameterTooLarge { name: &'static str, param: usize, cap: usize },
    #[error("InvalidParameter: {name}({param})")]
    InvalidParameter { name: &'static str, param: usize },
}

/// A finite group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    // table[i * order + j] = index of g_i * g_j
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    name: Option<String>,
}

impl FiniteGroup {
    /// Validates a multiplication table and builds the group.
    ///
    /// Checks run in the order shape, identity, Latin square, inverses,
    /// associativity; the first failure is reported.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::MalformedTable("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::MalformedTable(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(GroupError::MalformedTable(format!("row {i} has out-of-range entry {bad}")));
            }
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let at = |i: usize, j: usize| flat[i * n + j];

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;

        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                let r = at(i, j);
                if std::mem::replace(&mut seen_row[r], true) {
                    return Err(GroupError::NotLatinSquare { line: "row", index: i, element: r });
                }
                let c = at(j, i);
                if std::mem::replace(&mut seen_col[c], true) {
                    return Err(GroupError::NotLatinSquare { line: "column", index: i, element: c });
                }
            }
        }

        let mut inverse = Vec::with_capacity(n);
        for i in 0..n {
            let inv = (0..n)
                .find(|&j| at(i, j) == identity && at(j, i) == identity)
                .ok_or(GroupError::NoInverse(i))?;
            inverse.push(inv);
        }

        for i in 0..n {
            for j in 0..n {
                let ij = at(i, j);
                for k in 0..n {
                    if at(ij, k) != at(i, at(j, k)) {
                        return Err(GroupError::NotAssociative(i, j, k));
                    }
                }
            }
        }

        Ok(Self { order: n, table: flat, identity, inverse, name: None })
    }

    /// Closes `generators` under composition with the default order cap.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Self, GroupError> {
        Self::from_permutations_capped(degree, generators, DEFAULT_ORDER_CAP)
    }

    /// Breadth-first closure of the generators; elements are numbered in
    /// discovery order starting from the identity. The product `p * q` of two
    /// permutations is the composite "apply `q`, then `p`".
    pub fn from_permutations_capped(
        degree: usize,
        generators: &[Vec<usize>],
        cap: usize,
    ) -> Result<Self, GroupError> {
        for (index, g) in generators.iter().enumerate() {
            if !is_permutation(g, degree) {
                return Err(GroupError::InvalidPermutation { index, degree });
            }
        }
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&x| p[x]).collect() };

        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index_of = HashMap::from([(identity, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = compose(&elements[x], g);
                if !index_of.contains_key(&y) {
                    if elements.len() == cap {
                        return Err(GroupError::ClosureTooLarge { cap });
                    }
                    index_of.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }

        let table = elements
            .iter()
            .map(|p| elements.iter().map(|q| index_of[&compose(p, q)]).collect())
            .collect();
        Self::from_table(table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `a b a^-1 b^-1`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        self.mul(self.mul(ab, self.inverse[a]), self.inverse[b])
    }

    /// `h g h^-1`
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(h, g), self.inverse[h])
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        ConjugacyClasses::of(self)
    }
}

fn is_permutation(p: &[usize], degree: usize) -> bool {
    if p.len() != degree {
        return false;
    }
    let mut seen = vec![false; degree];
    p.iter().all(|&x| x < degree && !std::mem::replace(&mut seen[x], true))
}

/// The named groups of the built-in corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltinGroup {
    Cyclic(usize),
    Symmetric(usize),
    /// Symmetry group of the regular n-gon, order 2n.
    Dihedral(usize),
    Quaternion8,
}

impl BuiltinGroup {
    /// Parses tags such as `Z4`, `C5`, `S3`, `D4`, `Q8`, `trivial`, `cyclic(5)`.
    pub fn parse(tag: &str) -> Result<Self, GroupError> {
        let unknown = || GroupError::UnknownName(tag.to_string());
        let t = tag.trim();
        match t.to_ascii_lowercase().as_str() {
            "q8" | "quaternion8" => return Ok(Self::Quaternion8),
            "trivial" | "1" => return Ok(Self::Cyclic(1)),
            _ => {}
        }
        let (head, num) = if let Some(open) = t.find('(') {
            let inner = t[open + 1..].strip_suffix(')').ok_or_else(unknown)?;
            (&t[..open], inner)
        } else {
            let split = t.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?;
            (&t[..split], &t[split..])
        };
        let n: usize = num.trim().parse().map_err(|_| unknown())?;
        match head.to_ascii_lowercase().as_str() {
            "z" | "c" | "cyclic" => Ok(Self::Cyclic(n)),
            "s" | "symmetric" => Ok(Self::Symmetric(n)),
            "d" | "dihedral" => Ok(Self::Dihedral(n)),
            _ => Err(unknown()),
        }
    }

    pub fn build(self) -> Result<FiniteGroup, GroupError> {
        let group = match self {
            Self::Cyclic(n) => {
                check_param("cyclic", n, 1, DEFAULT_ORDER_CAP)?;
                FiniteGroup::from_table((0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect())?
            }
            Self::Symmetric(n) => {
                check_param("symmetric", n, 1, 7)?;
                let mut gens = Vec::new();
                if n >= 2 {
                    let mut transposition: Vec<usize> = (0..n).collect();
                    transposition.swap(0, 1);
                    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
                    gens.push(transposition);
                    gens.push(cycle);
                }
                FiniteGroup::from_permutations(n, &gens)?
            }
            Self::Dihedral(n) => {
                check_param("dihedral", n, 1, DEFAULT_ORDER_CAP / 2)?;
                // element r^a s^b has index a + n*b; s r^a = r^-a s
                let decode = |x: usize| (x % n, x / n);
                let table = (0..2 * n)
                    .map(|x| {
                        (0..2 * n)
                            .map(|y| {
                                let ((a1, b1), (a2, b2)) = (decode(x), decode(y));
                                let a = if b1 == 0 { (a1 + a2) % n } else { (a1 + n - a2) % n };
                                a + n * ((b1 + b2) % 2)
                            })
                            .collect()
                    })
                    .collect();
                FiniteGroup::from_table(table)?
            }
            Self::Quaternion8 => {
                // index = 2*u + s for unit u in (1, i, j, k) and sign s (0 = +, 1 = -)
                const UNIT: [[(usize, usize); 4]; 4] = [
                    [(0, 0), (1, 0), (2, 0), (3, 0)],
                    [(1, 0), (0, 1), (3, 0), (2, 1)],
                    [(2, 0), (3, 1), (0, 1), (1, 0)],
                    [(3, 0), (2, 0), (1, 1), (0, 1)],
                ];
                let table = (0..8)
                    .map(|x| {
                        (0..8)
                            .map(|y| {
                                let (u, s) = UNIT[x / 2][y / 2];
                                2 * u + (s + x % 2 + y % 2) % 2
                            })
                            .collect()
                    })
                    .collect();
                FiniteGroup::from_table(table)?
            }
        };
        Ok(group.with_name(self.to_string()))
    }
}

fn check_param(name: &'static str, param: usize, min: usize, cap: usize) -> Result<(), GroupError> {
    if param < min {
        Err(GroupError::InvalidParameter { name, param })
    } else if param > cap {
        Err(GroupError::ParameterTooLarge { name, param, cap })
    } else {
        Ok(())
    }
}

impl fmt::Display for BuiltinGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cyclic(n) => write!(f, "Z{n}"),
            Self::Symmetric(n) => write!(f, "S{n}"),
            Self::Dihedral(n) => write!(f, "D{n}"),
            Self::Quaternion8 => write!(f, "Q8"),
        }
    }
}

/// Looks up a built-in group by tag.
pub fn builtin_group(tag: &str) -> Result<FiniteGroup, GroupError> {
    BuiltinGroup::parse(tag)?.build()
}

/// Partition of a group into conjugacy classes.
///
/// Class 0 is always `{identity}`; the remaining classes are ordered by their
/// smallest member, and members within a class are sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClasses {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn of(group: &FiniteGroup) -> Self {
        let n = group.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        let seeds = std::iter::once(group.identity()).chain((0..n).filter(|&g| g != group.identity()));
        for g in seeds {
            if class_of[g] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = Vec::new();
            for h in 0..n {
                let c = group.conjugate(g, h);
                if class_of[c] == usize::MAX {
                    class_of[c] = id;
                    members.push(c);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        Self { classes, class_of }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Smallest member of class `i`.
    pub fn representative(&self, i: usize) -> usize {
        self.classes[i][0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(degree: usize, cyc: &[usize]) -> Vec<usize> {
        let mut p: Vec<usize> = (0..degree).collect();
        for w in 0..cyc.len() {
            p[cyc[w]] = cyc[(w + 1) % cyc.len()];
        }
        p
    }

    // Z/6 with the intercalate on rows 1,4 x columns 1,4 flipped. Still a
    // Latin square with identity 0 and inverses, but (1*1)*2 != 1*(1*2).
    fn loop_of_order_six() -> Vec<Vec<usize>> {
        let mut t: Vec<Vec<usize>> = (0..6).map(|i| (0..6).map(|j| (i + j) % 6).collect()).collect();
        t[1][1] = 5;
        t[1][4] = 2;
        t[4][1] = 2;
        t[4][4] = 5;
        t
    }

    #[test]
    fn trivial_and_z2_tables() {
        let g = FiniteGroup::from_table(vec![vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        let z2 = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!((z2.order(), z2.identity()), (2, 0));
        assert_eq!(z2.inv(1), 1);
    }

    #[test]
    fn non_associative_loop_is_rejected() {
        let err = FiniteGroup::from_table(loop_of_order_six()).unwrap_err();
        assert_eq!(err, GroupError::NotAssociative(1, 1, 2));
        if let GroupError::NotAssociative(i, j, k) = err {
            let t = loop_of_order_six();
            assert_ne!(t[t[i][j]][k], t[i][t[j][k]]);
        }
    }

    #[test]
    fn table_validation_errors() {
        assert!(matches!(
            FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]),
            Err(GroupError::NoIdentity | GroupError::NotLatinSquare { .. })
        ));
        assert!(matches!(
            FiniteGroup::from_table(vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 0, 1]]),
            Err(GroupError::NotLatinSquare { line: "row", index: 1, element: 2 })
        ));
        assert!(matches!(FiniteGroup::from_table(vec![vec![0, 1]]), Err(GroupError::MalformedTable(_))));
        assert!(matches!(FiniteGroup::from_table(vec![vec![0, 5], vec![1, 0]]), Err(GroupError::MalformedTable(_))));
        assert!(matches!(FiniteGroup::from_table(vec![vec![1, 0], vec![0, 0]]), Err(GroupError::NoIdentity)));
    }

    #[test]
    fn permutation_closure_orders() {
        let s3 = FiniteGroup::from_permutations(3, &[cycle(3, &[0, 1]), cycle(3, &[0, 1, 2])]).unwrap();
        assert_eq!(s3.order(), 6);
        let z4 = FiniteGroup::from_permutations(4, &[cycle(4, &[0, 1, 2, 3])]).unwrap();
        assert_eq!(z4.order(), 4);
        assert!(z4.is_abelian());
        let trivial = FiniteGroup::from_permutations(2, &[]).unwrap();
        assert_eq!(trivial.order(), 1);
    }

    #[test]
    fn permutation_closure_errors() {
        assert!(matches!(
            FiniteGroup::from_permutations(3, &[vec![0, 0, 1]]),
            Err(GroupError::InvalidPermutation { index: 0, degree: 3 })
        ));
        let gens = [cycle(5, &[0, 1]), cycle(5, &[0, 1, 2, 3, 4])];
        assert!(matches!(
            FiniteGroup::from_permutations_capped(5, &gens, 100),
            Err(GroupError::ClosureTooLarge { cap: 100 })
        ));
        assert_eq!(FiniteGroup::from_permutations_capped(5, &gens, 120).unwrap().order(), 120);
    }

    #[test]
    fn builtin_orders() {
        assert_eq!(builtin_group("Z5").unwrap().order(), 5);
        assert_eq!(builtin_group("cyclic(5)").unwrap().order(), 5);
        assert_eq!(builtin_group("S3").unwrap().order(), 6);
        assert_eq!(builtin_group("S4").unwrap().order(), 24);
        assert_eq!(builtin_group("D4").unwrap().order(), 8);
        assert_eq!(builtin_group("Q8").unwrap().order(), 8);
        assert_eq!(builtin_group("trivial").unwrap().order(), 1);
        assert_eq!(builtin_group("S1").unwrap().order(), 1);
        assert_eq!(builtin_group("Q8").unwrap().name(), Some("Q8"));
    }

    #[test]
    fn builtin_errors() {
        assert!(matches!(builtin_group("X3"), Err(GroupError::UnknownName(_))));
        assert!(matches!(builtin_group("hello"), Err(GroupError::UnknownName(_))));
        assert!(matches!(builtin_group("S8"), Err(GroupError::ParameterTooLarge { .. })));
        assert!(matches!(builtin_group("Z0"), Err(GroupError::InvalidParameter { .. })));
    }

    #[test]
    fn q8_is_nonabelian_with_unique_involution() {
        let q8 = builtin_group("Q8").unwrap();
        assert!(!q8.is_abelian());
        let involutions = (0..8).filter(|&g| g != q8.identity() && q8.mul(g, g) == q8.identity()).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn class_structure_examples() {
        let s3 = builtin_group("S3").unwrap().conjugacy_classes();
        assert_eq!(s3.sizes(), vec![1, 3, 2]);
        let z4 = builtin_group("Z4").unwrap().conjugacy_classes();
        assert_eq!(z4.sizes(), vec![1, 1, 1, 1]);
        let q8 = builtin_group("Q8").unwrap().conjugacy_classes();
        let mut sizes = q8.sizes();
        assert_eq!(sizes.len(), 5);
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
        assert_eq!(builtin_group("D4").unwrap().conjugacy_classes().len(), 5);
        assert_eq!(builtin_group("S4").unwrap().conjugacy_classes().len(), 5);
    }

    #[test]
    fn identity_class_first_even_when_identity_is_not_index_zero() {
        // Z/2 with the identity stored at index 1
        let g = FiniteGroup::from_table(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.identity(), 1);
        let cc = g.conjugacy_classes();
        assert_eq!(cc.classes(), &[vec![1], vec![0]]);
    }
}
