//! Finitely presented abelian groups.
//!
//! A group is the cokernel of an integer matrix: `gens` generators subject
//! to the columns of `rels`. Tensor and internal hom stay inside the
//! category, canonical forms (free rank plus ascending invariant factors)
//! decide isomorphism, and morphisms are generator-image matrices checked
//! for well-definedness against relations.

use crate::linalg::{
    self, in_colspan, int, kernel_basis, smith, solve, IntMatrix,
};
use num::bigint::BigInt;
use num::{Integer, One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct FPAbGroup {
    pub gens: usize,
    /// gens x m relation matrix; the group is Z^gens / colspan(rels).
    pub rels: IntMatrix,
}

impl fmt::Debug for FPAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonical();
        write!(f, "FPAbGroup(gens={}, canon={})", self.gens, c)
    }
}

/// Free rank and invariant factors d_1 | d_2 | ... with each d_i >= 2.
/// Two groups are isomorphic iff their canonical forms are equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalForm {
    pub rank: usize,
    pub factors: Vec<BigInt>,
}

impl CanonicalForm {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.factors.is_empty()
    }

    /// Number of elements; None when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.rank > 0 {
            return None;
        }
        Some(self.factors.iter().fold(BigInt::one(), |acc, d| acc * d))
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{}", d)).collect();
        if self.rank > 0 {
            parts.push(format!("Z^{}", self.rank));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl FPAbGroup {
    pub fn new(gens: usize, rels: IntMatrix) -> Self {
        assert_eq!(rels.rows, gens, "relation matrix must have one row per generator");
        FPAbGroup { gens, rels }
    }

    pub fn free(rank: usize) -> Self {
        FPAbGroup { gens: rank, rels: IntMatrix::zero(rank, 0) }
    }

    pub fn zero() -> Self {
        Self::free(0)
    }

    pub fn integers() -> Self {
        Self::free(1)
    }

    /// Z/n as a one-generator presentation.
    pub fn cyclic(n: i64) -> Self {
        FPAbGroup { gens: 1, rels: IntMatrix::from_rows(&[&[n]]) }
    }

    /// Direct sum of cyclic groups Z/d for the listed d (0 meaning Z).
    pub fn diagonal(ds: &[i64]) -> Self {
        let n = ds.len();
        let diag: Vec<BigInt> = ds.iter().map(|d| int(*d)).collect();
        FPAbGroup { gens: n, rels: IntMatrix::diagonal(&diag, n, n) }
    }

    pub fn is_zero_presentation(&self) -> bool {
        self.gens == 0
    }

    pub fn canonical(&self) -> CanonicalForm {
        let s = smith(&self.rels);
        let factors = s.invariant_factors();
        CanonicalForm { rank: self.gens - s.rank, factors }
    }

    pub fn is_trivial(&self) -> bool {
        self.canonical().is_trivial()
    }

    pub fn isomorphic(&self, other: &FPAbGroup) -> bool {
        self.canonical() == other.canonical()
    }

    /// Direct sum with block inclusions and projections.
    pub fn direct_sum(&self, other: &FPAbGroup) -> (FPAbGroup, FPMorphism, FPMorphism, FPMorphism, FPMorphism) {
        let gens = self.gens + other.gens;
        let rels = IntMatrix::from_fn(gens, self.rels.cols + other.rels.cols, |r, c| {
            if r < self.gens && c < self.rels.cols {
                self.rels.at(r, c).clone()
            } else if r >= self.gens && c >= self.rels.cols {
                other.rels.at(r - self.gens, c - self.rels.cols).clone()
            } else {
                BigInt::zero()
            }
        });
        let sum = FPAbGroup { gens, rels };
        let inc1 = FPMorphism::new(
            self.clone(),
            sum.clone(),
            IntMatrix::from_fn(gens, self.gens, |r, c| {
                if r == c { BigInt::one() } else { BigInt::zero() }
            }),
        );
        let inc2 = FPMorphism::new(
            other.clone(),
            sum.clone(),
            IntMatrix::from_fn(gens, other.gens, |r, c| {
                if r == c + self.gens { BigInt::one() } else { BigInt::zero() }
            }),
        );
        let pr1 = FPMorphism::new(
            sum.clone(),
            self.clone(),
            IntMatrix::from_fn(self.gens, gens, |r, c| {
                if r == c { BigInt::one() } else { BigInt::zero() }
            }),
        );
        let pr2 = FPMorphism::new(
            sum.clone(),
            other.clone(),
            IntMatrix::from_fn(other.gens, gens, |r, c| {
                if r + self.gens == c { BigInt::one() } else { BigInt::zero() }
            }),
        );
        (sum, inc1, inc2, pr1, pr2)
    }

    /// Coordinates of each element of a finite group, as generator-coefficient
    /// columns. Panics on infinite groups.
    pub fn elements(&self) -> Vec<IntMatrix> {
        let s = smith(&self.rels);
        let canon = self.canonical();
        assert_eq!(canon.rank, 0, "elements() needs a finite group");
        // Z^gens / im(rels) with im(rels) = u * im(d): coordinates in the u-basis
        // are cyclic with moduli the diagonal entries.
        let mut moduli: Vec<BigInt> = Vec::new();
        for i in 0..self.gens {
            let d = if i < s.d.rows.min(s.d.cols) { s.d.at(i, i).clone() } else { BigInt::zero() };
            moduli.push(d);
        }
        let mut els = vec![vec![BigInt::zero(); self.gens]];
        for (i, m) in moduli.iter().enumerate() {
            if m.is_one() {
                continue;
            }
            let bound: BigInt = m.clone();
            let mut next = Vec::new();
            for e in &els {
                let mut k = BigInt::zero();
                while &k < &bound {
                    let mut e2 = e.clone();
                    e2[i] = k.clone();
                    next.push(e2);
                    k += 1;
                }
            }
            els = next;
        }
        // convert from u-basis coordinates back to generator coordinates
        els.into_iter()
            .map(|coords| {
                let col = IntMatrix::from_fn(self.gens, 1, |r, _| coords[r].clone());
                s.u.mul(&col)
            })
            .collect()
    }

    /// Reduce a generator-coordinate column to a canonical residue pattern:
    /// coordinates in the Smith basis with torsion entries reduced mod d_i.
    pub fn reduce(&self, col: &IntMatrix) -> Vec<BigInt> {
        assert_eq!(col.rows, self.gens);
        let s = smith(&self.rels);
        let c = s.u_inv.mul(col);
        (0..self.gens)
            .map(|i| {
                let d = if i < s.d.rows.min(s.d.cols) { s.d.at(i, i).clone() } else { BigInt::zero() };
                if d.is_zero() {
                    c.at(i, 0).clone()
                } else {
                    c.at(i, 0).mod_floor(&d)
                }
            })
            .collect()
    }

    pub fn element_eq(&self, a: &IntMatrix, b: &IntMatrix) -> bool {
        self.reduce(a) == self.reduce(b)
    }
}

/// Morphism of finitely presented abelian groups given on generators.
#[derive(Clone, PartialEq, Eq)]
pub struct FPMorphism {
    pub source: FPAbGroup,
    pub target: FPAbGroup,
    /// target.gens x source.gens
    pub matrix: IntMatrix,
}

impl fmt::Debug for FPMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FPMorphism({:?} -> {:?})", self.source, self.target)
    }
}

impl FPMorphism {
    pub fn new(source: FPAbGroup, target: FPAbGroup, matrix: IntMatrix) -> Self {
        assert_eq!(matrix.rows, target.gens);
        assert_eq!(matrix.cols, source.gens);
        FPMorphism { source, target, matrix }
    }

    pub fn identity(g: &FPAbGroup) -> Self {
        Self::new(g.clone(), g.clone(), IntMatrix::identity(g.gens))
    }

    pub fn zero(source: &FPAbGroup, target: &FPAbGroup) -> Self {
        Self::new(source.clone(), target.clone(), IntMatrix::zero(target.gens, source.gens))
    }

    /// Well-defined iff the images of the source relations die in the target.
    pub fn is_well_defined(&self) -> bool {
        in_colspan(&self.target.rels, &self.matrix.mul(&self.source.rels))
    }

    pub fn compose(&self, inner: &FPMorphism) -> FPMorphism {
        assert_eq!(inner.target, self.source, "composition mismatch");
        FPMorphism::new(inner.source.clone(), self.target.clone(), self.matrix.mul(&inner.matrix))
    }

    pub fn add(&self, other: &FPMorphism) -> FPMorphism {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        FPMorphism::new(self.source.clone(), self.target.clone(), self.matrix.add(&other.matrix))
    }

    pub fn sub(&self, other: &FPMorphism) -> FPMorphism {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        FPMorphism::new(self.source.clone(), self.target.clone(), self.matrix.sub(&other.matrix))
    }

    /// Equal as homomorphisms: the difference maps every generator into the
    /// target relation lattice.
    pub fn eq_as_morphism(&self, other: &FPMorphism) -> bool {
        if self.source != other.source || self.target != other.target {
            return false;
        }
        in_colspan(&self.target.rels, &self.matrix.sub(&other.matrix))
    }

    pub fn is_zero_morphism(&self) -> bool {
        in_colspan(&self.target.rels, &self.matrix)
    }
}

/// Presentation of a subquotient <gens> / (<gens> ∩ im(modulo)) of Z^a,
/// where `gens` columns generate a subgroup of Z^a containing im(modulo).
/// Returned on the given generators.
pub fn subquotient(gens: &IntMatrix, modulo: &IntMatrix) -> FPAbGroup {
    assert_eq!(gens.rows, modulo.rows);
    let s = gens.cols;
    // relations: alpha with gens * alpha in im(modulo)
    let system = gens.hstack(modulo);
    let ker = kernel_basis(&system);
    let rels = ker.submatrix_rows(&(0..s).collect::<Vec<_>>());
    FPAbGroup { gens: s, rels }
}

/// H = G/im(f) for f landing in Z^gens; cokernel of a plain matrix.
pub fn cokernel(a: &IntMatrix) -> FPAbGroup {
    FPAbGroup { gens: a.rows, rels: a.clone() }
}

/// Tensor product over Z by concatenated relation blocks
/// (R_G (x) id, id (x) R_H).
pub fn fp_tensor(g: &FPAbGroup, h: &FPAbGroup) -> FPAbGroup {
    let ig = IntMatrix::identity(g.gens);
    let ih = IntMatrix::identity(h.gens);
    let block1 = g.rels.kronecker(&ih);
    let block2 = ig.kronecker(&h.rels);
    FPAbGroup { gens: g.gens * h.gens, rels: block1.hstack(&block2) }
}

pub fn fp_tensor_mor(f: &FPMorphism, k: &FPMorphism) -> FPMorphism {
    FPMorphism::new(
        fp_tensor(&f.source, &k.source),
        fp_tensor(&f.target, &k.target),
        f.matrix.kronecker(&k.matrix),
    )
}

/// Internal hom Hom_Z(G, H) presented on explicit generator matrices.
#[derive(Clone, Debug)]
pub struct HomGroup {
    pub group: FPAbGroup,
    /// One (H.gens x G.gens) matrix per presentation generator.
    pub gen_maps: Vec<IntMatrix>,
    pub source: FPAbGroup,
    pub target: FPAbGroup,
}

fn vec_columns(m: &IntMatrix) -> IntMatrix {
    // column-major vectorisation as a single column
    IntMatrix::from_fn(m.rows * m.cols, 1, |r, _| m.at(r % m.rows, r / m.rows).clone())
}

fn unvec(col: &IntMatrix, rows: usize, cols: usize) -> IntMatrix {
    assert_eq!(col.rows, rows * cols);
    IntMatrix::from_fn(rows, cols, |r, c| col.at(c * rows + r, 0).clone())
}

/// Solutions F of the well-definedness constraint F R_G ∈ im(R_H) columnwise,
/// modulo homotopies F = R_H Y. Generators are retained as matrices so that
/// evaluation, adjunction and composition stay computable.
pub fn fp_hom(g: &FPAbGroup, h: &FPAbGroup) -> HomGroup {
    hom_with_constraints(g, h, &[])
}

/// Hom subject to additional Z-linear constraints: for each pair (a, b) in
/// `constraints`, solutions must satisfy F a = b F modulo im(R_H).
/// Used for S-linear homs where a acts on the source and b on the target.
pub fn hom_with_constraints(
    g: &FPAbGroup,
    h: &FPAbGroup,
    constraints: &[(IntMatrix, IntMatrix)],
) -> HomGroup {
    let (n, q) = (g.gens, h.gens);
    let (m, p) = (g.rels.cols, h.rels.cols);
    // unknowns: vec(F) (q n) plus one slack block per constraint batch
    // primary constraint: F * R_G = R_H * X
    let mut rows_blocks: Vec<(IntMatrix, usize)> = Vec::new();
    // vec(F R_G) = (R_G^T (x) I_q) vec F
    let a0 = g.rels.transpose().kronecker(&IntMatrix::identity(q));
    rows_blocks.push((a0, m)); // slack width m (columns of R_G) -> X is p x m
    for (act_src, act_tgt) in constraints {
        assert_eq!(act_src.rows, n);
        assert_eq!(act_src.cols, n);
        assert_eq!(act_tgt.rows, q);
        assert_eq!(act_tgt.cols, q);
        // vec(F a - b F) = (a^T (x) I_q - I_n (x) b) vec F
        let lhs = act_src
            .transpose()
            .kronecker(&IntMatrix::identity(q))
            .sub(&IntMatrix::identity(n).kronecker(act_tgt));
        rows_blocks.push((lhs, n)); // slack X is p x n
    }
    // assemble [A | -B] with B block-diagonal copies of (I_k (x) R_H)
    let total_rows: usize = rows_blocks.iter().map(|(a, _)| a.rows).sum();
    let slack_cols: usize = rows_blocks.iter().map(|(_, k)| p * k).sum();
    let mut system = IntMatrix::zero(total_rows, q * n + slack_cols);
    let mut row_off = 0;
    let mut col_off = q * n;
    for (a, k) in &rows_blocks {
        for r in 0..a.rows {
            for c in 0..a.cols {
                system.set(row_off + r, c, a.at(r, c).clone());
            }
        }
        // minus I_k (x) R_H
        let b = IntMatrix::identity(*k).kronecker(&h.rels);
        assert_eq!(b.rows, a.rows);
        for r in 0..b.rows {
            for c in 0..b.cols {
                system.set(row_off + r, col_off + c, -b.at(r, c).clone());
            }
        }
        row_off += a.rows;
        col_off += p * k;
    }
    let ker = kernel_basis(&system);
    let sol = ker.submatrix_rows(&(0..q * n).collect::<Vec<_>>());
    // drop duplicate / zero generator columns early for compact presentations
    let mut keep: Vec<usize> = Vec::new();
    for c in 0..sol.cols {
        let col = sol.submatrix_cols(&[c]);
        if !col.is_zero() {
            keep.push(c);
        }
    }
    let sol = sol.submatrix_cols(&keep);
    let s = sol.cols;
    // relations among generators: alpha with sol * alpha = vec(R_H Y)
    let psi = IntMatrix::identity(n).kronecker(&h.rels);
    let rel_sys = sol.hstack(&psi);
    let ker2 = kernel_basis(&rel_sys);
    let rels = ker2.submatrix_rows(&(0..s).collect::<Vec<_>>());
    let gen_maps: Vec<IntMatrix> = (0..s).map(|c| unvec(&sol.submatrix_cols(&[c]), q, n)).collect();
    HomGroup { group: FPAbGroup { gens: s, rels }, gen_maps, source: g.clone(), target: h.clone() }
}

impl HomGroup {
    /// Express a concrete homomorphism matrix in hom-presentation coordinates.
    pub fn coordinates_of(&self, f: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(f.rows, self.target.gens);
        assert_eq!(f.cols, self.source.gens);
        let mut k = IntMatrix::zero(self.target.gens * self.source.gens, self.gen_maps.len());
        for (c, g) in self.gen_maps.iter().enumerate() {
            let v = vec_columns(g);
            for r in 0..k.rows {
                k.set(r, c, v.at(r, 0).clone());
            }
        }
        // allow adjustment by homotopies through target relations
        let psi = IntMatrix::identity(self.source.gens).kronecker(&self.target.rels);
        let system = k.hstack(&psi);
        let sol = solve(&system, &vec_columns(f))?;
        Some(sol.submatrix_rows(&(0..self.gen_maps.len()).collect::<Vec<_>>()))
    }

    /// The homomorphism matrix represented by hom-presentation coordinates.
    pub fn matrix_of(&self, coords: &IntMatrix) -> IntMatrix {
        assert_eq!(coords.rows, self.gen_maps.len());
        let mut acc = IntMatrix::zero(self.target.gens, self.source.gens);
        for (i, g) in self.gen_maps.iter().enumerate() {
            acc = acc.add(&g.scale(coords.at(i, 0)));
        }
        acc
    }

    /// Evaluation Hom(G,H) (x) G -> H on presentation generators.
    pub fn evaluation(&self) -> FPMorphism {
        let dom = fp_tensor(&self.group, &self.source);
        let mut mat = IntMatrix::zero(self.target.gens, dom.gens);
        for (i, g) in self.gen_maps.iter().enumerate() {
            for j in 0..self.source.gens {
                for r in 0..self.target.gens {
                    mat.set(r, i * self.source.gens + j, g.at(r, j).clone());
                }
            }
        }
        FPMorphism::new(dom, self.target.clone(), mat)
    }
}

/// Adjoint X -> Hom(A, B) of a morphism X (x) A -> B.
pub fn hom_adjoint(hom: &HomGroup, f: &FPMorphism, x: &FPAbGroup) -> Option<FPMorphism> {
    let a = &hom.source;
    assert_eq!(f.source.gens, x.gens * a.gens, "adjoint source mismatch");
    assert_eq!(f.target, hom.target);
    let mut cols = IntMatrix::zero(hom.group.gens, x.gens);
    for i in 0..x.gens {
        // the map a_j -> f(x_i (x) a_j)
        let fi = IntMatrix::from_fn(hom.target.gens, a.gens, |r, j| {
            f.matrix.at(r, i * a.gens + j).clone()
        });
        let coords = hom.coordinates_of(&fi)?;
        for r in 0..hom.group.gens {
            cols.set(r, i, coords.at(r, 0).clone());
        }
    }
    Some(FPMorphism::new(x.clone(), hom.group.clone(), cols))
}

/// Unadjoint X (x) A -> B of a morphism X -> Hom(A, B).
pub fn hom_unadjoint(hom: &HomGroup, g: &FPMorphism) -> FPMorphism {
    assert_eq!(g.target, hom.group);
    let x = &g.source;
    let a = &hom.source;
    let dom = fp_tensor(x, a);
    let mut mat = IntMatrix::zero(hom.target.gens, dom.gens);
    for i in 0..x.gens {
        let coords = IntMatrix::from_fn(hom.group.gens, 1, |r, _| g.matrix.at(r, i).clone());
        let fi = hom.matrix_of(&coords);
        for j in 0..a.gens {
            for r in 0..hom.target.gens {
                mat.set(r, i * a.gens + j, fi.at(r, j).clone());
            }
        }
    }
    FPMorphism::new(dom, hom.target.clone(), mat)
}

/// Coevaluation X -> Hom(A, X (x) A), the adjoint of the identity.
pub fn coevaluation(x: &FPAbGroup, a: &FPAbGroup) -> (HomGroup, FPMorphism) {
    let xa = fp_tensor(x, a);
    let hom = fp_hom(a, &xa);
    let id = FPMorphism::identity(&xa);
    let coev = hom_adjoint(&hom, &id, x)
        .expect("coevaluation must be expressible in hom generators");
    (hom, coev)
}

/// Canonical form of Hom_Z(G, H), used by fp_hom consumers that only need
/// the isomorphism type.
pub fn fp_hom_group(g: &FPAbGroup, h: &FPAbGroup) -> FPAbGroup {
    fp_hom(g, h).group
}

/// True iff f is invertible: surjective (generators of the target are hit
/// modulo relations) and with trivial kernel subquotient.
pub fn fp_is_iso(f: &FPMorphism) -> Result<bool, String> {
    if !f.is_well_defined() {
        return Err("morphism not well defined over source relations".into());
    }
    // surjectivity: coker([F | R_H]) = 0
    let coker = FPAbGroup {
        gens: f.target.gens,
        rels: f.matrix.hstack(&f.target.rels),
    };
    if !coker.is_trivial() {
        return Ok(false);
    }
    // injectivity: {x : F x in im R_H} / im R_G = 0
    let ker_sys = f.matrix.hstack(&f.target.rels);
    let ker = kernel_basis(&ker_sys);
    let pre = ker.submatrix_rows(&(0..f.source.gens).collect::<Vec<_>>());
    let kernel_group = subquotient(&pre, &f.source.rels);
    Ok(kernel_group.is_trivial())
}

/// Induced map on cokernel presentations for a commuting square of lattices:
/// lifts target coordinates along the generator matrix `tgt_gens` (which must
/// be a basis of its span).
pub fn express_in_basis(basis: &IntMatrix, vectors: &IntMatrix) -> Option<IntMatrix> {
    linalg::solve(basis, vectors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z_n(n: i64) -> FPAbGroup {
        FPAbGroup::cyclic(n)
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(FPAbGroup::free(2).canonical(), CanonicalForm { rank: 2, factors: vec![] });
        assert_eq!(z_n(4).canonical(), CanonicalForm { rank: 0, factors: vec![int(4)] });
        // Z/2 + Z/3 = Z/6 (chinese remainder)
        let g = FPAbGroup::diagonal(&[2, 3]);
        assert_eq!(g.canonical(), CanonicalForm { rank: 0, factors: vec![int(6)] });
    }

    #[test]
    fn canonical_invariant_under_presentation_change() {
        // append a redundant relation and a redundant generator
        let g = FPAbGroup::new(1, IntMatrix::from_rows(&[&[4, 8]]));
        assert_eq!(g.canonical(), z_n(4).canonical());
        let h = FPAbGroup::new(2, IntMatrix::from_rows(&[&[4, 0], &[0, 1]]));
        assert_eq!(h.canonical(), z_n(4).canonical());
    }

    #[test]
    fn tensor_examples() {
        let z = FPAbGroup::integers();
        let h = FPAbGroup::diagonal(&[2, 0]);
        assert!(fp_tensor(&z, &h).isomorphic(&h));
        assert!(fp_tensor(&z_n(2), &z_n(3)).is_trivial());
        assert_eq!(
            fp_tensor(&z_n(2), &z_n(4)).canonical(),
            CanonicalForm { rank: 0, factors: vec![int(2)] }
        );
    }

    #[test]
    fn hom_examples() {
        // Hom(Z, H) = H
        let h = FPAbGroup::diagonal(&[4, 0]);
        assert!(fp_hom_group(&FPAbGroup::integers(), &h).isomorphic(&h));
        // Hom(Z/2, Z) = 0
        assert!(fp_hom_group(&z_n(2), &FPAbGroup::integers()).is_trivial());
        // Hom(Z/2, Z/4) = Z/2
        assert_eq!(
            fp_hom_group(&z_n(2), &z_n(4)).canonical(),
            CanonicalForm { rank: 0, factors: vec![int(2)] }
        );
    }

    /// Independent brute-force count of homomorphisms between finite groups.
    fn brute_force_hom_count(g: &FPAbGroup, h: &FPAbGroup) -> usize {
        let h_els = h.elements();
        let mut count = 0usize;
        let mut assignment = vec![0usize; g.gens];
        loop {
            // build candidate matrix
            let f = IntMatrix::from_fn(h.gens, g.gens, |r, c| {
                h_els[assignment[c]].at(r, 0).clone()
            });
            let mor = FPMorphism::new(g.clone(), h.clone(), f);
            if mor.is_well_defined() {
                count += 1;
            }
            // odometer
            let mut i = 0;
            loop {
                if i == g.gens {
                    return count;
                }
                assignment[i] += 1;
                if assignment[i] < h_els.len() {
                    break;
                }
                assignment[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn hom_matches_brute_force() {
        for (g, h) in [
            (z_n(2), z_n(4)),
            (z_n(4), z_n(2)),
            (z_n(6), z_n(4)),
            (FPAbGroup::diagonal(&[2, 2]), z_n(4)),
        ] {
            let hom = fp_hom(&g, &h);
            let expected = brute_force_hom_count(&g, &h);
            let got = hom.group.canonical().order().expect("finite hom group");
            assert_eq!(got, BigInt::from(expected), "hom({:?},{:?})", g, h);
        }
    }

    #[test]
    fn iso_checks() {
        let z4 = z_n(4);
        assert!(fp_is_iso(&FPMorphism::identity(&z4)).unwrap());
        // x2 : Z -> Z is not invertible
        let z = FPAbGroup::integers();
        let twice = FPMorphism::new(z.clone(), z.clone(), IntMatrix::from_rows(&[&[2]]));
        assert!(!fp_is_iso(&twice).unwrap());
        // chinese remainder map Z/2 + Z/3 -> Z/6, (a, b) -> 3a + 4b
        let src = FPAbGroup::diagonal(&[2, 3]);
        let tgt = z_n(6);
        let crt = FPMorphism::new(src, tgt, IntMatrix::from_rows(&[&[3, 4]]));
        assert!(crt.is_well_defined());
        assert!(fp_is_iso(&crt).unwrap());
    }

    #[test]
    fn crt_map_is_bijective_on_elements() {
        let src = FPAbGroup::diagonal(&[2, 3]);
        let tgt = z_n(6);
        let crt = FPMorphism::new(src.clone(), tgt.clone(), IntMatrix::from_rows(&[&[3, 4]]));
        let mut seen = std::collections::BTreeSet::new();
        for e in src.elements() {
            let img = crt.matrix.mul(&e);
            seen.insert(format!("{:?}", tgt.reduce(&img)));
        }
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn subquotient_presents_homology_style_quotients() {
        // <2 e1> / <4 e1> inside Z: Z/2... as subquotient of Z^1
        let gens = IntMatrix::from_rows(&[&[2]]);
        let modulo = IntMatrix::from_rows(&[&[4]]);
        let q = subquotient(&gens, &modulo);
        assert_eq!(q.canonical(), CanonicalForm { rank: 0, factors: vec![int(2)] });
    }

    #[test]
    fn hom_adjunction_roundtrip() {
        // adjoint/unadjoint are mutually inverse on a sample morphism
        let x = z_n(2);
        let a = z_n(4);
        let b = z_n(4);
        let hom = fp_hom(&a, &b);
        let xa = fp_tensor(&x, &a);
        // f : X (x) A -> B, generator x (x) a -> 2a
        let f = FPMorphism::new(xa.clone(), b.clone(), IntMatrix::from_rows(&[&[2]]));
        assert!(f.is_well_defined());
        let adj = hom_adjoint(&hom, &f, &x).unwrap();
        assert!(adj.is_well_defined());
        let back = hom_unadjoint(&hom, &adj);
        assert!(back.eq_as_morphism(&f));
    }
}
