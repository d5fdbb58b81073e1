//! Finite-dimensional Lie algebras given by structure constants, with
//! adjoint matrices, the trace form and root data.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// `λ = Σ k_i α_i` in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RootWeight(pub Vec<i64>);

impl RootWeight {
    pub fn zero(rank: usize) -> Self {
        RootWeight(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut w = RootWeight::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&k| k == 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn scale(&self, n: i64) -> RootWeight {
        RootWeight(self.0.iter().map(|k| k * n).collect())
    }
}

impl Add for &RootWeight {
    type Output = RootWeight;
    fn add(self, o: &RootWeight) -> RootWeight {
        let n = self.0.len().max(o.0.len());
        RootWeight((0..n).map(|i| self.0.get(i).unwrap_or(&0) + o.0.get(i).unwrap_or(&0)).collect())
    }
}

impl Sub for &RootWeight {
    type Output = RootWeight;
    fn sub(self, o: &RootWeight) -> RootWeight {
        self + &-o
    }
}

impl Neg for &RootWeight {
    type Output = RootWeight;
    fn neg(self) -> RootWeight {
        RootWeight(self.0.iter().map(|k| -k).collect())
    }
}

/// Writes `2a1 - a2`; the zero weight prints as `0`.
impl fmt::Display for RootWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &k) in self.0.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let mag = k.unsigned_abs();
            let body = if mag == 1 { format!("a{}", i + 1) } else { format!("{mag}a{}", i + 1) };
            match (first, k < 0) {
                (true, false) => f.write_str(&body)?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Where a basis vector sits in the triangular decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisRole {
    Negative(RootWeight),
    Cartan(usize),
    Positive(RootWeight),
}

impl BasisRole {
    /// The ad(h)-weight of the basis vector.
    pub fn weight(&self, rank: usize) -> RootWeight {
        match self {
            BasisRole::Negative(r) => -r,
            BasisRole::Cartan(_) => RootWeight::zero(rank),
            BasisRole::Positive(r) => r.clone(),
        }
    }

    fn block(&self) -> u8 {
        match self {
            BasisRole::Negative(_) => 0,
            BasisRole::Cartan(_) => 1,
            BasisRole::Positive(_) => 2,
        }
    }
}

/// Simple-root data derived from the roles of the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootData {
    pub rank: usize,
    /// `a_ij = α_j(h_i)`, so that `[h_i, e_j] = a_ij e_j`.
    pub cartan: Vec<Vec<i64>>,
    /// Basis indices `(e_i, f_i, h_i)` of the Chevalley generators.
    pub simple: Vec<(usize, usize, usize)>,
}

/// An element of the Lie algebra in basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieElement(pub Vec<Scalar>);

impl LieElement {
    pub fn zero(dim: usize) -> Self {
        LieElement(vec![Scalar::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut x = LieElement::zero(dim);
        x.0[i] = Scalar::one();
        x
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        LieElement(self.0.iter().map(|x| x * c).collect())
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

impl Add for &LieElement {
    type Output = LieElement;
    fn add(self, o: &LieElement) -> LieElement {
        LieElement(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, o: &LieElement) -> LieElement {
        LieElement(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

/// `(e_θ, e_{−θ}, h_θ)` with `(e_θ|e_{−θ}) = 1` and `h_θ = [e_θ, e_{−θ}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaTriple {
    pub theta: RootWeight,
    pub e_theta: LieElement,
    pub e_minus_theta: LieElement,
    pub h_theta: LieElement,
}

/// A Lie algebra over `C` given by structure constants in a fixed basis.
///
/// When roles are supplied the basis must list negative root vectors, then
/// the Cartan subalgebra, then positive root vectors; this is also the PBW
/// order used by the enveloping algebra.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<LieElement>>,
    roles: Option<Vec<BasisRole>>,
    root_data: Option<RootData>,
    ad: Vec<Matrix>,
}

impl LieAlgebra {
    /// Builds and validates an algebra from `[b_i, b_j] = Σ c_k b_k` for `i < j`.
    pub fn new(
        name: &str,
        labels: Vec<String>,
        brackets: &BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
        roles: Option<Vec<BasisRole>>,
    ) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::InvalidAlgebra(String::from("empty basis")));
        }
        let mut table = vec![vec![LieElement::zero(dim); dim]; dim];
        for (&(i, j), terms) in brackets {
            if i >= dim || j >= dim {
                return Err(Error::InvalidAlgebra(format!("bracket index ({i}, {j}) out of range")));
            }
            let mut x = LieElement::zero(dim);
            for (k, c) in terms {
                if *k >= dim {
                    return Err(Error::InvalidAlgebra(format!("bracket result index {k} out of range")));
                }
                x.0[*k] += c;
            }
            if i == j && !x.is_zero() {
                return Err(Error::InvalidAlgebra(format!("[{0}, {0}] must vanish", labels[i])));
            }
            let neg = x.scale(&-Scalar::one());
            if !table[i][j].is_zero() && table[i][j] != x {
                return Err(Error::InvalidAlgebra(format!("inconsistent brackets for ({i}, {j})")));
            }
            if !table[j][i].is_zero() && table[j][i] != neg {
                return Err(Error::InvalidAlgebra(format!("bracket ({j}, {i}) is not antisymmetric")));
            }
            table[i][j] = x;
            table[j][i] = neg;
        }
        let ad =
            (0..dim).map(|i| Matrix::from_columns(&table[i].iter().map(|c| c.0.clone()).collect::<Vec<_>>())).collect();
        let mut g = LieAlgebra { name: String::from(name), labels, table, roles: None, root_data: None, ad };
        g.check_jacobi()?;
        if let Some(roles) = roles {
            g.attach_roles(roles)?;
        }
        Ok(g)
    }

    fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (x, y, z) = (self.basis(i), self.basis(j), self.basis(k));
                    let s = &(&self.bracket(&self.bracket(&x, &y), &z) + &self.bracket(&self.bracket(&y, &z), &x))
                        + &self.bracket(&self.bracket(&z, &x), &y);
                    if !s.is_zero() {
                        return Err(Error::InvalidAlgebra(format!(
                            "Jacobi identity fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn attach_roles(&mut self, roles: Vec<BasisRole>) -> Result<()> {
        let n = self.dim();
        if roles.len() != n {
            return Err(Error::InvalidAlgebra(String::from("one role per basis vector required")));
        }
        if roles.windows(2).any(|w| w[0].block() > w[1].block()) {
            return Err(Error::InvalidAlgebra(String::from("roles must be ordered negative, Cartan, positive")));
        }
        let rank = roles.iter().filter(|r| matches!(r, BasisRole::Cartan(_))).count();
        let mut h = vec![usize::MAX; rank];
        for (b, r) in roles.iter().enumerate() {
            if let BasisRole::Cartan(i) = r {
                if *i >= rank || h[*i] != usize::MAX {
                    return Err(Error::InvalidAlgebra(String::from("Cartan labels must be 0..rank")));
                }
                h[*i] = b;
            }
        }
        let find = |want: &RootWeight, positive: bool| {
            roles.iter().position(|r| match r {
                BasisRole::Positive(x) if positive => x == want,
                BasisRole::Negative(x) if !positive => x == want,
                _ => false,
            })
        };
        let mut simple = Vec::new();
        for (i, &hi) in h.iter().enumerate().take(rank) {
            let a = RootWeight::simple(rank, i);
            let (Some(e), Some(f)) = (find(&a, true), find(&a, false)) else {
                return Err(Error::InvalidAlgebra(format!("missing root vectors for simple root {}", i + 1)));
            };
            simple.push((e, f, hi));
        }
        let mut cartan = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            for (j, &(e, _, _)) in simple.iter().enumerate() {
                let br = self.bracket(&self.basis(h[i]), &self.basis(e));
                let c = &br.0[e];
                let Some(v) = c.as_rational().filter(|q| q.is_integer()) else {
                    return Err(Error::InvalidAlgebra(String::from("Cartan entries must be integers")));
                };
                cartan[i][j] = i64::try_from(v.to_integer())
                    .map_err(|_| Error::InvalidAlgebra(String::from("Cartan entry overflow")))?;
                if br != self.basis(e).scale(c) {
                    return Err(Error::InvalidAlgebra(String::from("simple root vectors are not ad(h)-eigenvectors")));
                }
            }
        }
        // every root vector must carry the weight its role claims
        for (b, role) in roles.iter().enumerate() {
            let w = role.weight(rank);
            for i in 0..rank {
                let lam: i64 = (0..rank).map(|j| w.0[j] * cartan[i][j]).sum();
                let br = self.bracket(&self.basis(h[i]), &self.basis(b));
                if br != self.basis(b).scale(&Scalar::from_int(lam)) {
                    return Err(Error::InvalidAlgebra(format!(
                        "{} is not a weight vector of the claimed weight",
                        self.labels[b]
                    )));
                }
            }
        }
        self.roles = Some(roles);
        self.root_data = Some(RootData { rank, cartan, simple });
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn roles(&self) -> Option<&[BasisRole]> {
        self.roles.as_deref()
    }

    pub fn root_data(&self) -> Result<&RootData> {
        self.root_data.as_ref().ok_or_else(|| Error::NotSimple(format!("{} carries no root data", self.name)))
    }

    pub fn rank(&self) -> usize {
        self.root_data.as_ref().map_or(0, |r| r.rank)
    }

    /// ad(h)-weight of a basis vector; zero when no root data is attached.
    pub fn basis_weight(&self, i: usize) -> RootWeight {
        match &self.roles {
            Some(roles) => roles[i].weight(self.rank()),
            None => RootWeight::zero(0),
        }
    }

    pub fn basis(&self, i: usize) -> LieElement {
        LieElement::basis(self.dim(), i)
    }

    /// `[b_i, b_j]` from the table.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &LieElement {
        &self.table[i][j]
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> LieElement {
        let mut out = LieElement::zero(self.dim());
        for (i, a) in x.support() {
            for (j, b) in y.support() {
                let ab = a * b;
                for (k, c) in self.table[i][j].support() {
                    out.0[k] += &(c * &ab);
                }
            }
        }
        out
    }

    /// The matrix of `ad(b_i)`, cached.
    pub fn ad_basis(&self, i: usize) -> &Matrix {
        &self.ad[i]
    }

    /// The matrix of `ad(x)` in the fixed basis (column `j` is `[x, b_j]`).
    pub fn ad_matrix(&self, x: &LieElement) -> Matrix {
        let mut out = Matrix::zero(self.dim());
        for (i, c) in x.support() {
            out = &out + &self.ad[i].scale(c);
        }
        out
    }

    /// `(x|y) = tr(ad x · ad y)`.
    pub fn trace_form(&self, x: &LieElement, y: &LieElement) -> Scalar {
        self.ad_matrix(x).trace_product(&self.ad_matrix(y))
    }

    /// The highest root `θ` and its normalised triple.
    pub fn highest_root_triple(&self) -> Result<ThetaTriple> {
        self.root_data()?;
        let roles = self.roles.as_ref().expect("roles accompany root data");
        let (top, theta) = roles
            .iter()
            .enumerate()
            .filter_map(|(i, r)| match r {
                BasisRole::Positive(w) => Some((i, w.clone())),
                _ => None,
            })
            .max_by_key(|(_, w)| w.height())
            .ok_or_else(|| Error::NotSimple(String::from("no positive roots")))?;
        let low = roles
            .iter()
            .position(|r| *r == BasisRole::Negative(theta.clone()))
            .ok_or_else(|| Error::NotSimple(String::from("highest root has no negative partner")))?;
        let e_theta = self.basis(top);
        let f = self.basis(low);
        let pairing = self.trace_form(&e_theta, &f);
        let e_minus_theta =
            f.scale(&pairing.inv().map_err(|_| Error::NotSimple(String::from("degenerate trace form")))?);
        let h_theta = self.bracket(&e_theta, &e_minus_theta);
        Ok(ThetaTriple { theta, e_theta, e_minus_theta, h_theta })
    }
}

/// `sl(n, C)` in a Chevalley basis ordered negative roots, Cartan, positive roots.
///
/// Simple generators are labelled `f_i, h_i, e_i`; the remaining root
/// vectors `E_ij` are labelled `e_ij` / `f_ij` by matrix position.
pub fn build_sl(n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::Range(format!("sl({n}) needs n >= 2")));
    }
    let rank = n - 1;
    // positive roots E_{ij}, i < j, sorted by height then by row
    let mut pos: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    pos.sort_by_key(|&(i, j)| (j - i, i));
    let root = |i: usize, j: usize| {
        let mut w = RootWeight::zero(rank);
        for k in i..j {
            w.0[k] = 1;
        }
        w
    };
    let name = |prefix: &str, i: usize, j: usize| {
        if j == i + 1 {
            format!("{prefix}_{}", i + 1)
        } else if n <= 9 {
            format!("{prefix}_{}{}", i + 1, j + 1)
        } else {
            format!("{prefix}_{}_{}", i + 1, j + 1)
        }
    };

    // basis matrices as dense integer arrays
    let mut mats: Vec<Vec<i64>> = Vec::new();
    let mut labels = Vec::new();
    let mut roles = Vec::new();
    let unit = |i: usize, j: usize| {
        let mut m = vec![0i64; n * n];
        m[i * n + j] = 1;
        m
    };
    for &(i, j) in &pos {
        mats.push(unit(j, i));
        labels.push(name("f", i, j));
        roles.push(BasisRole::Negative(root(i, j)));
    }
    for i in 0..rank {
        let mut m = vec![0i64; n * n];
        m[i * n + i] = 1;
        m[(i + 1) * n + i + 1] = -1;
        mats.push(m);
        labels.push(format!("h_{}", i + 1));
        roles.push(BasisRole::Cartan(i));
    }
    for &(i, j) in &pos {
        mats.push(unit(i, j));
        labels.push(name("e", i, j));
        roles.push(BasisRole::Positive(root(i, j)));
    }
    let dim = mats.len();
    let npos = pos.len();

    // coordinates of a traceless matrix in the basis
    let decompose = |m: &[i64]| -> Vec<(usize, Scalar)> {
        let mut out = Vec::new();
        for (idx, &(i, j)) in pos.iter().enumerate() {
            if m[j * n + i] != 0 {
                out.push((idx, Scalar::from_int(m[j * n + i])));
            }
            if m[i * n + j] != 0 {
                out.push((npos + rank + idx, Scalar::from_int(m[i * n + j])));
            }
        }
        let mut acc = 0;
        for i in 0..rank {
            acc += m[i * n + i];
            if acc != 0 {
                out.push((npos + i, Scalar::from_int(acc)));
            }
        }
        out
    };
    let mut brackets = BTreeMap::new();
    for a in 0..dim {
        for b in a + 1..dim {
            let mut c = vec![0i64; n * n];
            for i in 0..n {
                for j in 0..n {
                    let mut s = 0;
                    for k in 0..n {
                        s += mats[a][i * n + k] * mats[b][k * n + j] - mats[b][i * n + k] * mats[a][k * n + j];
                    }
                    c[i * n + j] = s;
                }
            }
            let terms = decompose(&c);
            if !terms.is_empty() {
                brackets.insert((a, b), terms);
            }
        }
    }
    LieAlgebra::new(&format!("sl{n}"), labels, &brackets, Some(roles))
}
