//! Rank-1 and rank-2 root systems: Cartan data, the Weyl group as integer
//! matrices acting on fundamental-weight coordinates, and the chamber
//! geometry used by the polynomial reductions.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

pub const MAX_RANK: usize = 2;

const COORD_LIMIT: i64 = 1 << 31;

/// The algebras this crate knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraId {
    A1,
    A2,
    C2,
    G2,
}

impl AlgebraId {
    pub fn rank(self) -> usize {
        match self {
            AlgebraId::A1 => 1,
            _ => 2,
        }
    }

    /// Cartan matrix `C_ij = 2(a_i, a_j)/(a_j, a_j)`, padded to 2x2.
    ///
    /// For C2 and G2 the first simple root is the short one.
    pub fn cartan(self) -> [[i64; 2]; 2] {
        match self {
            AlgebraId::A1 => [[2, 0], [0, 0]],
            AlgebraId::A2 => [[2, -1], [-1, 2]],
            AlgebraId::C2 => [[2, -1], [-2, 2]],
            AlgebraId::G2 => [[2, -1], [-3, 2]],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgebraId::A1 => "A1",
            AlgebraId::A2 => "A2",
            AlgebraId::C2 => "C2",
            AlgebraId::G2 => "G2",
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for AlgebraId {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a1" => Ok(AlgebraId::A1),
            "a2" => Ok(AlgebraId::A2),
            "c2" => Ok(AlgebraId::C2),
            "g2" => Ok(AlgebraId::G2),
            other => Err(crate::Error::Parse(format!("unknown algebra {other:?}"))),
        }
    }
}

/// An integral weight in fundamental-weight coordinates.
///
/// Rank-1 weights keep their unused second coordinate at zero, so the
/// derived ordering is plain lexicographic order on the coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: [i64; MAX_RANK],
    rank: u8,
}

impl Weight {
    pub fn new(coords: &[i64]) -> Self {
        assert!(
            !coords.is_empty() && coords.len() <= MAX_RANK,
            "weight rank must be 1 or 2"
        );
        let mut c = [0; MAX_RANK];
        c[..coords.len()].copy_from_slice(coords);
        Self::from_array(c, coords.len())
    }

    pub fn new2(a: i64, b: i64) -> Self {
        Self::from_array([a, b], 2)
    }

    pub fn zero(rank: usize) -> Self {
        Self::from_array([0; MAX_RANK], rank)
    }

    /// The i-th fundamental weight.
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut c = [0; MAX_RANK];
        c[i] = 1;
        Self::from_array(c, rank)
    }

    fn from_array(coords: [i64; MAX_RANK], rank: usize) -> Self {
        debug_assert!((1..=MAX_RANK).contains(&rank));
        debug_assert!(coords[rank..].iter().all(|&c| c == 0));
        assert!(
            coords.iter().all(|c| c.abs() < COORD_LIMIT),
            "weight coordinate out of range: {coords:?}"
        );
        Self { coords, rank: rank as u8 }
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords[..self.rank()]
    }

    pub fn get(&self, i: usize) -> i64 {
        self.coords[i]
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut c = self.coords;
        c.iter_mut().for_each(|v| *v *= k);
        Self::from_array(c, self.rank())
    }

    pub fn is_dominant(&self) -> bool {
        self.coords().iter().all(|&c| c >= 0)
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.coords().iter().all(|&c| c > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl Add for Weight {
    type Output = Weight;

    fn add(self, rhs: Weight) -> Weight {
        debug_assert_eq!(self.rank, rhs.rank);
        Weight::from_array([self.coords[0] + rhs.coords[0], self.coords[1] + rhs.coords[1]], self.rank())
    }
}

impl Sub for Weight {
    type Output = Weight;

    fn sub(self, rhs: Weight) -> Weight {
        self + (-rhs)
    }
}

impl Neg for Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

type IntMatrix = [[i64; MAX_RANK]; MAX_RANK];

fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let mut out = [[0; MAX_RANK]; MAX_RANK];
    for i in 0..MAX_RANK {
        for j in 0..MAX_RANK {
            out[i][j] = (0..MAX_RANK).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

/// A Weyl group element as an integer matrix on weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    matrix: IntMatrix,
    rank: usize,
    det: i64,
    /// Generator indices (0-based), leftmost factor first: `[0, 1]` is `w1 w2`.
    word: Vec<usize>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        Self {
            matrix: [[1, 0], [0, 1]],
            rank,
            det: 1,
            word: Vec::new(),
        }
    }

    pub fn det(&self) -> i64 {
        self.det
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn word_length(&self) -> usize {
        self.word.len()
    }

    /// Matrix entry acting on the first `rank` coordinates.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn act(&self, mu: &Weight) -> Weight {
        debug_assert_eq!(mu.rank(), self.rank);
        let mut c = [0; MAX_RANK];
        for (i, ci) in c.iter_mut().enumerate().take(self.rank) {
            *ci = (0..self.rank).map(|j| self.matrix[i][j] * mu.get(j)).sum();
        }
        Weight::from_array(c, self.rank)
    }

    /// Product `self * other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement {
            matrix: mat_mul(&self.matrix, &other.matrix),
            rank: self.rank,
            det: self.det * other.det,
            word,
        }
    }

    pub fn same_matrix(&self, other: &WeylElement) -> bool {
        self.matrix == other.matrix
    }

    /// Human-readable word like `w1w2w1`, or `e`.
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            return "e".into();
        }
        self.word.iter().map(|g| format!("w{}", g + 1)).collect()
    }
}

/// Result of comparing two weights in the dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Less,
    Greater,
    Equal,
    Incomparable,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    algebra: AlgebraId,
    rank: usize,
    cartan: IntMatrix,
    cartan_inverse: [[Rational64; MAX_RANK]; MAX_RANK],
    /// Half squared lengths of the simple roots; the short root has 1.
    half_norms: [i64; MAX_RANK],
    gram: [[Rational64; MAX_RANK]; MAX_RANK],
    elements: Vec<WeylElement>,
    rho: Weight,
    positive_roots: Vec<Weight>,
}

impl RootSystem {
    pub fn new(algebra: AlgebraId) -> Self {
        let rank = algebra.rank();
        let cartan = algebra.cartan();
        let cartan_inverse = invert(&cartan, rank);
        let half_norms = symmetrizer(&cartan, rank);
        let mut gram = [[Rational64::zero(); MAX_RANK]; MAX_RANK];
        for i in 0..rank {
            for j in 0..rank {
                gram[i][j] = cartan_inverse[i][j] * Rational64::from_integer(half_norms[j]);
            }
        }
        let generators: Vec<WeylElement> = (0..rank).map(|i| generator(&cartan, rank, i)).collect();
        let elements = close_group(&generators, rank);
        let rho = Weight::from_array([1, if rank == 2 { 1 } else { 0 }], rank);

        let mut rs = Self {
            algebra,
            rank,
            cartan,
            cartan_inverse,
            half_norms,
            gram,
            elements,
            rho,
            positive_roots: Vec::new(),
        };
        rs.positive_roots = rs.compute_positive_roots();
        rs
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn cartan_inverse(&self, i: usize, j: usize) -> Rational64 {
        self.cartan_inverse[i][j]
    }

    /// Inner product matrix of the fundamental weights.
    pub fn gram(&self, i: usize, j: usize) -> Rational64 {
        self.gram[i][j]
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> &WeylElement {
        &self.elements[0]
    }

    /// The simple reflection `w_{i+1}`.
    pub fn generator(&self, i: usize) -> &WeylElement {
        self.elements
            .iter()
            .find(|w| w.word == [i])
            .expect("generators are reached at word length 1")
    }

    /// Looks up the element whose matrix equals the product of the given word.
    pub fn element_for_word(&self, word: &[usize]) -> &WeylElement {
        let product = word
            .iter()
            .fold(WeylElement::identity(self.rank), |acc, &g| acc.compose(self.generator(g)));
        self.find(&product).expect("group is closed")
    }

    pub fn find(&self, w: &WeylElement) -> Option<&WeylElement> {
        self.elements.iter().find(|e| e.same_matrix(w))
    }

    pub fn inverse(&self, w: &WeylElement) -> &WeylElement {
        self.elements
            .iter()
            .find(|e| e.compose(w).matrix == self.identity().matrix)
            .expect("group is closed")
    }

    pub fn rho(&self) -> Weight {
        self.rho
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::unit(self.rank, i)
    }

    /// Simple root `a_i` in weight coordinates: row `i` of the Cartan matrix.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::from_array(self.cartan[i], self.rank)
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn act(&self, w: &WeylElement, mu: &Weight) -> Weight {
        w.act(mu)
    }

    /// Coefficients `c` with `sum_i c_i a_i = mu`.
    pub fn to_root_coords(&self, mu: &Weight) -> Vec<Rational64> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| self.cartan_inverse[j][i] * Rational64::from_integer(mu.get(j)))
                    .sum()
            })
            .collect()
    }

    pub fn inner(&self, mu: &Weight, nu: &Weight) -> Rational64 {
        let mut acc = Rational64::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += self.gram[i][j] * Rational64::from_integer(mu.get(i) * nu.get(j));
            }
        }
        acc
    }

    pub fn is_dominant(&self, mu: &Weight) -> bool {
        mu.is_dominant()
    }

    pub fn is_strictly_dominant(&self, mu: &Weight) -> bool {
        mu.is_strictly_dominant()
    }

    /// First element (in group order) mapping `mu` into the closed dominant chamber.
    pub fn dominant_representative(&self, mu: &Weight) -> (&WeylElement, Weight) {
        self.elements
            .iter()
            .map(|w| (w, w.act(mu)))
            .find(|(_, v)| v.is_dominant())
            .expect("every orbit meets the dominant chamber")
    }

    pub fn dominance_compare(&self, mu: &Weight, nu: &Weight) -> Dominance {
        if mu == nu {
            return Dominance::Equal;
        }
        let diff = self.to_root_coords(&(*nu - *mu));
        if diff.iter().all(|c| !c.is_negative()) {
            Dominance::Less
        } else if diff.iter().all(|c| !c.is_positive()) {
            Dominance::Greater
        } else {
            Dominance::Incomparable
        }
    }

    /// Sum of root coordinates; strictly monotone along the dominance order.
    pub fn height(&self, mu: &Weight) -> Rational64 {
        self.to_root_coords(mu).into_iter().sum()
    }

    /// Order of the stabilizer of `mu` in the Weyl group.
    pub fn stabilizer_order(&self, mu: &Weight) -> usize {
        self.elements.iter().filter(|w| w.act(mu) == *mu).count()
    }

    /// Distinct elements of the orbit of `mu`, in group order of first appearance.
    pub fn orbit(&self, mu: &Weight) -> Vec<Weight> {
        let mut seen = Vec::new();
        for w in &self.elements {
            let v = w.act(mu);
            if !seen.contains(&v) {
                seen.push(v);
            }
        }
        seen
    }

    /// Dominant weights `nu <= mu` in the dominance order.
    pub fn dominant_weights_below(&self, mu: &Weight) -> Vec<Weight> {
        // nu_i = sum_j c_j C_ji <= 2 c_i for root coordinates c of nu, and c <= c(mu).
        let top = self.to_root_coords(mu);
        let bound: Vec<i64> = top.iter().map(|c| (c * 2).floor().to_integer().max(0)).collect();
        let mut out = Vec::new();
        let second = if self.rank == 2 { bound[1] } else { 0 };
        for a in 0..=bound[0] {
            for b in 0..=second {
                let nu = Weight::from_array([a, b], self.rank);
                if matches!(self.dominance_compare(&nu, mu), Dominance::Less | Dominance::Equal) {
                    out.push(nu);
                }
            }
        }
        out
    }

    /// Weyl dimension formula `prod_{a>0} (L + rho, a) / (rho, a)`.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Rational64 {
        let shifted = *lambda + self.rho;
        self.positive_roots
            .iter()
            .map(|a| self.inner(&shifted, a) / self.inner(&self.rho, a))
            .product()
    }

    fn compute_positive_roots(&self) -> Vec<Weight> {
        let mut roots: Vec<Weight> = Vec::new();
        for i in 0..self.rank {
            for r in self.orbit(&self.simple_root(i)) {
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
        let mut positive: Vec<Weight> = roots
            .into_iter()
            .filter(|r| self.to_root_coords(r).iter().all(|c| !c.is_negative()))
            .collect();
        positive.sort_by(|a, b| {
            self.height(a)
                .cmp(&self.height(b))
                .then_with(|| self.to_root_coords(a).cmp(&self.to_root_coords(b)))
        });
        positive
    }

    /// Half the squared length of simple root `i`.
    pub fn half_norm(&self, i: usize) -> i64 {
        self.half_norms[i]
    }
}

/// Simple reflection `w_i mu = mu - mu_i a_i`.
fn generator(cartan: &IntMatrix, rank: usize, i: usize) -> WeylElement {
    let mut m: IntMatrix = [[1, 0], [0, 1]];
    for k in 0..rank {
        m[k][i] -= cartan[i][k];
    }
    let det = if rank == 1 { m[0][0] } else { m[0][0] * m[1][1] - m[0][1] * m[1][0] };
    WeylElement {
        matrix: m,
        rank,
        det,
        word: vec![i],
    }
}

/// Breadth-first closure; each element keeps the first (shortest) word reaching it.
fn close_group(generators: &[WeylElement], rank: usize) -> Vec<WeylElement> {
    let mut elements = vec![WeylElement::identity(rank)];
    let mut index: HashMap<IntMatrix, usize> = HashMap::new();
    index.insert(elements[0].matrix, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in generators {
            let next = elements[i].compose(g);
            if let std::collections::hash_map::Entry::Vacant(slot) = index.entry(next.matrix) {
                slot.insert(elements.len());
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
    }
    elements
}

fn invert(c: &IntMatrix, rank: usize) -> [[Rational64; MAX_RANK]; MAX_RANK] {
    let z = Rational64::zero();
    if rank == 1 {
        return [[Rational64::new(1, c[0][0]), z], [z, z]];
    }
    let det = c[0][0] * c[1][1] - c[0][1] * c[1][0];
    let r = |v: i64| Rational64::new(v, det);
    [[r(c[1][1]), r(-c[0][1])], [r(-c[1][0]), r(c[0][0])]]
}

/// Diagonal `d` with `C diag(d)` symmetric and `min d = 1`.
fn symmetrizer(c: &IntMatrix, rank: usize) -> [i64; MAX_RANK] {
    if rank == 1 || c[0][1] == c[1][0] {
        return [1, if rank == 2 { 1 } else { 0 }];
    }
    // C_01 d_1 = C_10 d_0
    match c[1][0].abs().cmp(&c[0][1].abs()) {
        Ordering::Greater => [1, c[1][0] / c[0][1]],
        _ => [c[0][1] / c[1][0], 1],
    }
}

/// Checks the generator `w_i` against `w_i x = x - 2 (x, a_i)/(a_i, a_i) a_i` at `mu`.
pub fn satisfies_reflection_formula(rs: &RootSystem, i: usize, mu: &Weight) -> bool {
    let a = rs.simple_root(i);
    let coeff = rs.inner(mu, &a) * Rational64::from_integer(2) / rs.inner(&a, &a);
    if !coeff.is_integer() {
        return false;
    }
    let expected = *mu - a.scale(coeff.to_integer());
    rs.generator(i).act(mu) == expected
}
