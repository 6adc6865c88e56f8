//! Finite Coxeter groups realized on the root lattice.
//!
//! Group elements are integer matrices acting on the root lattice in the basis
//! of simple roots, which is a faithful representation for finite types.
//! Simple reflections act by `s_i(a_j) = a_j - a_ij a_i` for a crystallographic
//! Cartan matrix `a` compatible with the Coxeter matrix. Indices are 1-based in
//! the public API.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

pub mod props;

/// Default cap on the number of enumerated group elements.
pub const DEFAULT_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoxeterError {
    #[error("unknown index {0}")]
    UnknownIndex(usize),
    #[error("unknown type {0:?}")]
    UnknownType(String),
    #[error("bad subset {0:?}")]
    BadSubset(String),
    #[error("group has more than {0} elements")]
    CapExceeded(usize),
    #[error("index {0} is not in the subset")]
    NotInSubset(usize),
    #[error("Coxeter matrix entry m_{{{0}{1}}} = {2} is not one of 2, 3, 4, 6")]
    BadOrder(usize, usize, u32),
}

/// A subset `J` of the index set, 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetJ(BTreeSet<usize>);

impl SubsetJ {
    pub fn new<I: IntoIterator<Item = usize>>(items: I) -> Self {
        SubsetJ(items.into_iter().collect())
    }

    pub fn empty() -> Self {
        SubsetJ(BTreeSet::new())
    }

    /// Parse `"1,3"`; the empty string is the empty set.
    pub fn parse(s: &str) -> Result<Self, CoxeterError> {
        let s = s.trim();
        if s.is_empty() || s == "{}" {
            return Ok(Self::empty());
        }
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| CoxeterError::BadSubset(s.to_string())))
            .collect::<Result<BTreeSet<_>, _>>()
            .map(SubsetJ)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn union(&self, other: &SubsetJ) -> SubsetJ {
        SubsetJ(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &SubsetJ) -> SubsetJ {
        SubsetJ(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &SubsetJ) -> SubsetJ {
        SubsetJ(self.0.difference(&other.0).copied().collect())
    }
}

impl fmt::Display for SubsetJ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A group element as an `n x n` integer matrix; column `j` is the image of the
/// `j`-th simple root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    n: usize,
    mat: Vec<i64>,
}

impl GroupElement {
    pub fn identity(n: usize) -> Self {
        let mut mat = vec![0; n * n];
        for i in 0..n {
            mat[i * n + i] = 1;
        }
        GroupElement { n, mat }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.mat[row * self.n + col]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Matrix rows, for display and export.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.mat.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Apply to a vector in root coordinates.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        (0..self.n).map(|r| (0..self.n).map(|c| self.mat[r * self.n + c] * x[c]).sum()).collect()
    }

    pub fn mul(&self, rhs: &GroupElement) -> GroupElement {
        let n = self.n;
        let mut mat = vec![0; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.mat[r * n + k];
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    mat[r * n + c] += a * rhs.mat[k * n + c];
                }
            }
        }
        GroupElement { n, mat }
    }
}

/// Coxeter datum with a compatible crystallographic Cartan matrix and
/// precomputed positive roots.
#[derive(Clone, Debug)]
pub struct CoxeterDatum {
    name: String,
    m: Vec<Vec<u32>>,
    cartan: Vec<Vec<i64>>,
    gens: Vec<GroupElement>,
    positive_roots: Vec<Vec<i64>>,
    cap: usize,
}

fn order_from_product(p: i64) -> Option<u32> {
    match p {
        0 => Some(2),
        1 => Some(3),
        2 => Some(4),
        3 => Some(6),
        _ => None,
    }
}

/// Standard Cartan matrix of an irreducible finite type, `a_ij = <a_i^vee, a_j>`.
pub fn cartan_matrix_of(series: char, rank: usize) -> Option<Vec<Vec<i64>>> {
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>| {
        for i in 0..rank.saturating_sub(1) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    match (series, rank) {
        ('A', n) if n >= 1 => chain(&mut a),
        ('B', n) if n >= 2 => {
            chain(&mut a);
            a[n - 1][n - 2] = -2;
        }
        ('C', n) if n >= 2 => {
            chain(&mut a);
            a[n - 2][n - 1] = -2;
        }
        ('D', n) if n >= 4 => {
            chain(&mut a);
            a[n - 2][n - 1] = 0;
            a[n - 1][n - 2] = 0;
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
        ('G', 2) => {
            a[0][1] = -3;
            a[1][0] = -1;
        }
        ('F', 4) => {
            chain(&mut a);
            a[2][1] = -2;
        }
        _ => return None,
    }
    Some(a)
}

/// Parse a type string such as `"A2"`, `"B3"`, `"G2"` or a product `"A1xA2"`
/// into a block-diagonal Cartan matrix.
pub fn parse_cartan_type(s: &str) -> Result<Vec<Vec<i64>>, CoxeterError> {
    let unknown = || CoxeterError::UnknownType(s.to_string());
    let mut blocks = Vec::new();
    for part in s.trim().split(['x', 'X', '*']) {
        let part = part.trim();
        let mut chars = part.chars();
        let series = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
        let rank: usize = chars.as_str().parse().map_err(|_| unknown())?;
        blocks.push(cartan_matrix_of(series, rank).ok_or_else(unknown)?);
    }
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut a = vec![vec![0; n]; n];
    let mut off = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                a[off + i][off + j] = x;
            }
        }
        off += b.len();
    }
    Ok(a)
}

impl CoxeterDatum {
    /// Build from a crystallographic Cartan matrix (`a_ii = 2`).
    pub fn from_cartan(name: &str, cartan: Vec<Vec<i64>>) -> Result<Self, CoxeterError> {
        let n = cartan.len();
        let mut m = vec![vec![1u32; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let p = cartan[i][j] * cartan[j][i];
                    m[i][j] = order_from_product(p).ok_or(CoxeterError::BadOrder(i + 1, j + 1, p as u32))?;
                }
            }
        }
        let gens = (0..n)
            .map(|i| {
                let mut g = GroupElement::identity(n);
                for j in 0..n {
                    g.mat[i * n + j] -= cartan[i][j];
                }
                g
            })
            .collect();
        let mut datum =
            CoxeterDatum { name: name.to_string(), m, cartan, gens, positive_roots: Vec::new(), cap: DEFAULT_CAP };
        datum.positive_roots = datum.compute_positive_roots()?;
        Ok(datum)
    }

    /// Build from a Coxeter matrix with off-diagonal orders in {2, 3, 4, 6},
    /// choosing a crystallographic Cartan matrix.
    pub fn from_coxeter_matrix(m: &[Vec<u32>]) -> Result<Self, CoxeterError> {
        let n = m.len();
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            for j in (i + 1)..n {
                let (x, y) = match m[i][j] {
                    2 => (0, 0),
                    3 => (-1, -1),
                    4 => (-2, -1),
                    6 => (-3, -1),
                    other => return Err(CoxeterError::BadOrder(i + 1, j + 1, other)),
                };
                a[i][j] = x;
                a[j][i] = y;
            }
        }
        Self::from_cartan("custom", a)
    }

    /// Build from a type string (see [`parse_cartan_type`]).
    pub fn from_type(s: &str) -> Result<Self, CoxeterError> {
        Self::from_cartan(s, parse_cartan_type(s)?)
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    /// Order `m_ij` (1-based indices).
    pub fn order(&self, i: usize, j: usize) -> u32 {
        self.m[i - 1][j - 1]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn index_set(&self) -> SubsetJ {
        SubsetJ::new(1..=self.rank())
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    fn check_index(&self, i: usize) -> Result<(), CoxeterError> {
        if i == 0 || i > self.rank() {
            Err(CoxeterError::UnknownIndex(i))
        } else {
            Ok(())
        }
    }

    fn check_subset(&self, j: &SubsetJ) -> Result<(), CoxeterError> {
        j.iter().try_for_each(|i| self.check_index(i))
    }

    fn compute_positive_roots(&self) -> Result<Vec<Vec<i64>>, CoxeterError> {
        let n = self.rank();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        let mut out = Vec::new();
        while let Some(beta) = queue.pop_front() {
            for g in &self.gens {
                let image = g.apply(&beta);
                if image.iter().all(|&x| x >= 0) && seen.insert(image.clone()) {
                    if seen.len() > self.cap {
                        return Err(CoxeterError::CapExceeded(self.cap));
                    }
                    queue.push_back(image);
                }
            }
            out.push(beta);
        }
        out.sort();
        Ok(out)
    }

    /// Simple reflection `s_i`.
    pub fn generator(&self, i: usize) -> Result<&GroupElement, CoxeterError> {
        self.check_index(i)?;
        Ok(&self.gens[i - 1])
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.rank())
    }

    /// `s_{i_1} s_{i_2} ... s_{i_k}`.
    pub fn from_word(&self, word: &[usize]) -> Result<GroupElement, CoxeterError> {
        let mut w = self.identity();
        for &i in word {
            w = w.mul(self.generator(i)?);
        }
        Ok(w)
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &GroupElement) -> usize {
        self.positive_roots.iter().filter(|beta| w.apply(beta).iter().any(|&x| x < 0)).count()
    }

    /// Whether `l(s_i w) < l(w)`.
    pub fn is_left_descent(&self, w: &GroupElement, i: usize) -> bool {
        self.length(&self.gens[i - 1].mul(w)) < self.length(w)
    }

    /// Reduced word by peeling off the smallest left descent first.
    pub fn reduced_word(&self, w: &GroupElement) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w.clone();
        let mut len = self.length(&cur);
        while len > 0 {
            let i = (1..=self.rank())
                .find(|&i| self.length(&self.gens[i - 1].mul(&cur)) < len)
                .expect("nonidentity element has a left descent");
            word.push(i);
            cur = self.gens[i - 1].mul(&cur);
            len -= 1;
        }
        word
    }

    pub fn inverse(&self, w: &GroupElement) -> GroupElement {
        let mut word = self.reduced_word(w);
        word.reverse();
        self.from_word(&word).expect("indices from a reduced word are valid")
    }

    /// Longest element of `W_J`, by climbing through ascents in `J`.
    pub fn longest_element(&self, j: &SubsetJ) -> Result<GroupElement, CoxeterError> {
        self.check_subset(j)?;
        let mut w = self.identity();
        let mut len = 0;
        loop {
            let next = j.iter().find_map(|i| {
                let u = self.gens[i - 1].mul(&w);
                let lu = self.length(&u);
                (lu > len).then_some((u, lu))
            });
            match next {
                Some((u, lu)) => {
                    w = u;
                    len = lu;
                }
                None => return Ok(w),
            }
        }
    }

    /// `j*` defined by `s_{j*} = w0^J s_j w0^J`.
    pub fn star_involution(&self, j_set: &SubsetJ, j: usize) -> Result<usize, CoxeterError> {
        self.check_subset(j_set)?;
        if !j_set.contains(j) {
            return Err(CoxeterError::NotInSubset(j));
        }
        let w0 = self.longest_element(j_set)?;
        let conj = w0.mul(&self.gens[j - 1]).mul(&w0);
        Ok(j_set
            .iter()
            .find(|&k| self.gens[k - 1] == conj)
            .expect("conjugate of a simple reflection by w0^J is simple"))
    }

    /// `(cl(J), boundary(J), J-perp)` for the diagram topology where `i ~ j` iff `m_ij > 2`.
    pub fn topology(&self, j: &SubsetJ) -> Result<(SubsetJ, SubsetJ, SubsetJ), CoxeterError> {
        self.check_subset(j)?;
        let n = self.rank();
        let mut closure: BTreeSet<usize> = j.0.clone();
        let mut stack: Vec<usize> = closure.iter().copied().collect();
        while let Some(i) = stack.pop() {
            for k in 1..=n {
                if k != i && self.order(i, k) > 2 && closure.insert(k) {
                    stack.push(k);
                }
            }
        }
        let closure = SubsetJ(closure);
        let boundary = closure.difference(j);
        let perp = SubsetJ((1..=n).filter(|&i| !j.contains(i) && j.iter().all(|k| self.order(i, k) == 2)).collect());
        Ok((closure, boundary, perp))
    }

    /// All elements of `W_J` in breadth-first order from the identity.
    pub fn parabolic_elements(&self, j: &SubsetJ) -> Result<Vec<GroupElement>, CoxeterError> {
        self.check_subset(j)?;
        let mut seen: HashSet<GroupElement> = HashSet::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(self.identity());
        queue.push_back(self.identity());
        while let Some(w) = queue.pop_front() {
            for i in j.iter() {
                let u = w.mul(&self.gens[i - 1]);
                if seen.insert(u.clone()) {
                    if seen.len() > self.cap {
                        return Err(CoxeterError::CapExceeded(self.cap));
                    }
                    queue.push_back(u);
                }
            }
            order.push(w);
        }
        Ok(order)
    }

    /// All elements of `W`.
    pub fn elements(&self) -> Result<Vec<GroupElement>, CoxeterError> {
        self.parabolic_elements(&self.index_set())
    }

    /// Kernel of the action of `W` on `W/W_J`.
    pub fn kernel_parabolic(&self, j: &SubsetJ, mode: KernelMode) -> Result<Vec<GroupElement>, CoxeterError> {
        self.check_subset(j)?;
        let mut out = match mode {
            KernelMode::Formula => {
                let (cl, _, _) = self.topology(&self.index_set().difference(j))?;
                self.parabolic_elements(&self.index_set().difference(&cl))?
            }
            KernelMode::BruteForce => self.kernel_by_cosets(j)?,
        };
        out.sort();
        Ok(out)
    }

    fn kernel_by_cosets(&self, j: &SubsetJ) -> Result<Vec<GroupElement>, CoxeterError> {
        let all = self.elements()?;
        let index: HashMap<&GroupElement, usize> = all.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let sub = self.parabolic_elements(j)?;
        // Label each element by its left coset x W_J.
        let mut coset_of = vec![usize::MAX; all.len()];
        let mut reps = Vec::new();
        for (k, x) in all.iter().enumerate() {
            if coset_of[k] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(k);
            for u in &sub {
                coset_of[index[&x.mul(u)]] = c;
            }
        }
        Ok(all
            .iter()
            .filter(|g| reps.iter().enumerate().all(|(c, &r)| coset_of[index[&g.mul(&all[r])]] == c))
            .cloned()
            .collect())
    }
}

/// How [`CoxeterDatum::kernel_parabolic`] computes the kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelMode {
    /// `W_{I \ cl(I \ J)}`.
    Formula,
    /// Enumerate the cosets `W/W_J` and keep elements fixing every coset.
    BruteForce,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CoxeterDatum {
        CoxeterDatum::from_type("A2").unwrap()
    }

    #[test]
    fn words_and_braids() {
        let d = a2();
        assert!(d.from_word(&[]).unwrap().is_identity());
        assert!(d.from_word(&[1, 1]).unwrap().is_identity());
        assert_eq!(d.from_word(&[1, 2, 1]).unwrap(), d.from_word(&[2, 1, 2]).unwrap());
        assert!(d.from_word(&[3]).is_err());
    }

    #[test]
    fn lengths_and_reduced_words() {
        let d = a2();
        let w0 = d.longest_element(&d.index_set()).unwrap();
        assert_eq!(d.length(&w0), 3);
        assert_eq!(d.reduced_word(&w0), vec![1, 2, 1]);
        let p = CoxeterDatum::from_type("A1xA1").unwrap();
        let w0 = p.longest_element(&p.index_set()).unwrap();
        assert_eq!(p.reduced_word(&w0), vec![1, 2]);
    }

    #[test]
    fn root_counts() {
        for (t, n) in [("A1", 1), ("A2", 3), ("A3", 6), ("A4", 10), ("B2", 4), ("B3", 9), ("G2", 6), ("A1xA2", 4)] {
            assert_eq!(CoxeterDatum::from_type(t).unwrap().positive_roots().len(), n, "{t}");
        }
    }

    #[test]
    fn star_examples() {
        let d = a2();
        let i = d.index_set();
        assert_eq!(d.star_involution(&i, 1).unwrap(), 2);
        let b2 = CoxeterDatum::from_type("B2").unwrap();
        assert_eq!(b2.star_involution(&b2.index_set(), 1).unwrap(), 1);
        assert_eq!(d.star_involution(&SubsetJ::new([2]), 2).unwrap(), 2);
        assert!(d.star_involution(&SubsetJ::new([2]), 1).is_err());
    }

    #[test]
    fn topology_examples() {
        let d = a2();
        let (cl, b, p) = d.topology(&SubsetJ::new([1])).unwrap();
        assert_eq!((cl, b, p), (SubsetJ::new([1, 2]), SubsetJ::new([2]), SubsetJ::empty()));
        let p2 = CoxeterDatum::from_type("A1xA1").unwrap();
        let (cl, b, p) = p2.topology(&SubsetJ::new([1])).unwrap();
        assert_eq!((cl, b, p), (SubsetJ::new([1]), SubsetJ::empty(), SubsetJ::new([2])));
        let (cl, b, p) = p2.topology(&SubsetJ::empty()).unwrap();
        assert_eq!((cl, b, p), (SubsetJ::empty(), SubsetJ::empty(), SubsetJ::new([1, 2])));
    }

    #[test]
    fn kernel_examples() {
        let d = a2();
        let k = d.kernel_parabolic(&SubsetJ::new([1]), KernelMode::BruteForce).unwrap();
        assert_eq!(k, vec![d.identity()]);
        let p = CoxeterDatum::from_type("A1xA1").unwrap();
        let k = p.kernel_parabolic(&SubsetJ::new([1]), KernelMode::BruteForce).unwrap();
        assert_eq!(k.len(), 2);
        let all = d.kernel_parabolic(&d.index_set(), KernelMode::BruteForce).unwrap();
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn coxeter_matrix_constructor() {
        let d = CoxeterDatum::from_coxeter_matrix(&[vec![1, 6], vec![6, 1]]).unwrap();
        assert_eq!(d.elements().unwrap().len(), 12);
        assert!(CoxeterDatum::from_coxeter_matrix(&[vec![1, 5], vec![5, 1]]).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let d = CoxeterDatum::from_type("A4").unwrap().with_cap(50);
        assert_eq!(d.elements(), Err(CoxeterError::CapExceeded(50)));
    }

    #[test]
    fn parse_subsets() {
        assert_eq!(SubsetJ::parse("1,3").unwrap(), SubsetJ::new([1, 3]));
        assert_eq!(SubsetJ::parse("").unwrap(), SubsetJ::empty());
        assert!(SubsetJ::parse("a").is_err());
    }
}
