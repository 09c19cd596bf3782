//! The universal complexes: `RU_l` over `GF(2)^l` (materialized — vertex `i`
//! is the `(i+1)`-th mask in canonical order) and `U_l` over `Z^l` (predicate
//! level only: its vertex set is infinite, so membership goes through
//! [`is_simplex_int`] and is never materialized).
//!
//! Also here: the mod-2 reduction map on vertex sets, the explicit
//! equivalence maps between `link_{RU_l}(σ)` and `RU_{l-k}`, and the join
//! embedding `RU_l ∗ RU_k → RU_{l+k}`.

use thiserror::Error;

use crate::complex::{Simplex, SimplicialComplex, VertexMap};
use crate::gf2::{self, BitVector, Gf2Error};
use crate::lattice::{self, IntVector, LatticeError};

/// Cap on `l` for materializing skeletons of `RU_l` (vertex count `2^l - 1`).
pub const MAX_MATERIALIZED_RANK: usize = 12;

/// Cap on `l` for materializing the *full* `RU_l`: beyond this the number of
/// bases of `GF(2)^l` is impractical to store.
pub const MAX_FULL_RANK: usize = 5;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum UniversalError {
    #[error("rank {l} too large to materialize (cap {cap})")]
    TooLarge { l: usize, cap: usize },
    #[error("sigma is not independent, so it is not a simplex")]
    DependentSigma,
    #[error("sigma vector dimension {got} differs from rank {want}")]
    SigmaDimension { got: usize, want: usize },
    #[error("vector at index {0} is not primitive")]
    NotPrimitive(usize),
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// The mask of the vertex `index` of `RU_l` in canonical order.
pub fn vertex_vector(l: usize, index: usize) -> Result<BitVector, Gf2Error> {
    BitVector::new(l, index as u64 + 1)
}

/// The vertex index of a nonzero vector in `RU_{v.dim()}`.
pub fn vector_vertex(v: BitVector) -> usize {
    debug_assert!(!v.is_zero());
    (v.bits() - 1) as usize
}

/// Enumerates the independent `k`-subsets of the nonzero vectors of
/// `GF(2)^l`, optionally constrained to stay independent together with a seed
/// set, in increasing mask order. `f` receives the masks of each subset.
fn for_each_independent_subset(l: usize, k: usize, seed: &[u64], f: &mut impl FnMut(&[u64])) {
    let mut pivots = [0u64; 64];
    for &s in seed {
        let mut v = s;
        while v != 0 {
            let h = 63 - v.leading_zeros() as usize;
            if pivots[h] == 0 {
                pivots[h] = v;
                break;
            }
            v ^= pivots[h];
        }
    }
    let mut chosen = Vec::with_capacity(k);
    rec(l, k, 1, &mut pivots, &mut chosen, f);

    fn rec(
        l: usize,
        k: usize,
        start: u64,
        pivots: &mut [u64; 64],
        chosen: &mut Vec<u64>,
        f: &mut impl FnMut(&[u64]),
    ) {
        if chosen.len() == k {
            f(chosen);
            return;
        }
        for mask in start..(1u64 << l) {
            let mut v = mask;
            let mut slot = None;
            while v != 0 {
                let h = 63 - v.leading_zeros() as usize;
                if pivots[h] == 0 {
                    slot = Some((h, v));
                    break;
                }
                v ^= pivots[h];
            }
            if let Some((h, reduced)) = slot {
                pivots[h] = reduced;
                chosen.push(mask);
                rec(l, k, mask + 1, pivots, chosen, f);
                chosen.pop();
                pivots[h] = 0;
            }
        }
    }
}

/// The `d`-skeleton of `RU_l`: the complex on the `2^l - 1` nonzero vectors
/// of `GF(2)^l` whose simplices are the independent sets of size at most
/// `d + 1`. With `d >= l - 1` this is the whole of `RU_l` (dimension `l - 1`,
/// maximal simplices the bases). `l = 0` gives the empty complex.
pub fn real_universal_skeleton(l: usize, d: usize) -> Result<SimplicialComplex, UniversalError> {
    if l == 0 {
        return Ok(SimplicialComplex::empty());
    }
    if l > MAX_MATERIALIZED_RANK {
        return Err(UniversalError::TooLarge { l, cap: MAX_MATERIALIZED_RANK });
    }
    let k = (d + 1).min(l);
    if k == l && l > MAX_FULL_RANK {
        return Err(UniversalError::TooLarge { l, cap: MAX_FULL_RANK });
    }
    let mut facets = Vec::new();
    for_each_independent_subset(l, k, &[], &mut |masks| {
        facets.push(Simplex::new(masks.iter().map(|&m| (m - 1) as usize)));
    });
    Ok(SimplicialComplex::from_maximal_trusted((1 << l) - 1, facets))
}

/// True iff the vectors form a simplex of `RU_l`: all of dimension `l`,
/// nonzero, distinct, and linearly independent.
pub fn is_simplex_real(l: usize, vs: &[BitVector]) -> bool {
    if vs.iter().any(|v| v.dim() != l || v.is_zero()) {
        return false;
    }
    let mut masks: Vec<u64> = vs.iter().map(|v| v.bits()).collect();
    masks.sort_unstable();
    if masks.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    gf2::rank_of_masks(masks.iter().copied()) == vs.len()
}

/// True iff the vectors form a simplex of `U_l`: all of length `l`,
/// primitive, pairwise distinct, and a unimodular set.
pub fn is_simplex_int(l: usize, vs: &[IntVector]) -> bool {
    if vs.iter().any(|v| v.len() != l || !lattice::is_primitive(v)) {
        return false;
    }
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if vs[i] == vs[j] {
                return false;
            }
        }
    }
    matches!(lattice::is_unimodular_set(vs), Ok(true))
}

/// The vertex-level reduction map `U_l -> RU_l`: coordinate-wise mod 2.
/// Primitivity of the inputs is checked, which guarantees nonzero images;
/// unimodular sets map to independent sets.
pub fn reduction_map(vs: &[IntVector]) -> Result<Vec<BitVector>, UniversalError> {
    let mut out = Vec::with_capacity(vs.len());
    for (i, v) in vs.iter().enumerate() {
        if !lattice::is_primitive(v) {
            return Err(UniversalError::NotPrimitive(i));
        }
        let r = lattice::mod2_reduce(v)?;
        debug_assert!(!r.is_zero(), "primitive vectors reduce to nonzero masks");
        out.push(r);
    }
    Ok(out)
}

/// The two nondegenerate maps realizing `link_{RU_l}(σ) ∼ RU_{l-k}`.
#[derive(Debug, Clone)]
pub struct LinkEquivalence {
    /// The link complex, vertices densely indexed.
    pub link: SimplicialComplex,
    /// Mask of each link vertex (link index -> vector of `GF(2)^l`).
    pub link_vertex_masks: Vec<u64>,
    /// Embedding `RU_{l-k} -> link`, a section of `q`.
    pub p: VertexMap,
    /// Quotient-induced map `link -> RU_{l-k}`.
    pub q: VertexMap,
}

/// Builds the link of an independent set `σ` inside the full `RU_l` together
/// with the equivalence maps `p` and `q`.
///
/// `σ` is completed to a basis by scanning the canonical vector order; `q`
/// rewrites a link vertex in that basis and drops the `σ`-coordinates (the
/// projection onto `GF(2)^l / span(σ)` in concrete coordinates), while `p`
/// sends a vector of `GF(2)^{l-k}` to the matching combination of the
/// completed basis vectors. `q ∘ p` is the identity on vertices of
/// `RU_{l-k}`.
pub fn link_equivalence_maps(
    l: usize,
    sigma: &[BitVector],
) -> Result<LinkEquivalence, UniversalError> {
    if l == 0 || l > MAX_FULL_RANK {
        return Err(UniversalError::TooLarge {
            l,
            cap: MAX_FULL_RANK,
        });
    }
    for v in sigma {
        if v.dim() != l {
            return Err(UniversalError::SigmaDimension { got: v.dim(), want: l });
        }
    }
    if !gf2::is_independent(sigma)? {
        return Err(UniversalError::DependentSigma);
    }
    let k = sigma.len();
    let seed: Vec<u64> = sigma.iter().map(|v| v.bits()).collect();

    // Link vertices: nonzero vectors independent together with sigma.
    let mut link_vertex_masks = Vec::new();
    for_each_independent_subset(l, 1, &seed, &mut |masks| {
        link_vertex_masks.push(masks[0]);
    });
    let link_index = |mask: u64| -> usize {
        link_vertex_masks.binary_search(&mask).expect("link vertex")
    };

    // Link facets: maximal tau with tau ⊔ sigma independent.
    let mut facets = Vec::new();
    for_each_independent_subset(l, l - k, &seed, &mut |masks| {
        facets.push(Simplex::new(masks.iter().map(|&m| link_index(m))));
    });
    let link = if link_vertex_masks.is_empty() {
        SimplicialComplex::empty()
    } else {
        SimplicialComplex::from_maximal_trusted(link_vertex_masks.len(), facets)
    };

    // Complete sigma to a basis in canonical order.
    let mut basis: Vec<u64> = seed.clone();
    for mask in 1..(1u64 << l) {
        if basis.len() == l {
            break;
        }
        if gf2::rank_of_masks(basis.iter().copied().chain([mask])) == basis.len() + 1 {
            basis.push(mask);
        }
    }
    debug_assert_eq!(basis.len(), l);

    // Row-reduce the basis while tracking combinations, so any vector can be
    // rewritten in basis coordinates.
    let mut reduced: Vec<(u64, u64)> = Vec::with_capacity(l); // (mask, combo)
    for (i, &b) in basis.iter().enumerate() {
        let mut mask = b;
        let mut combo = 1u64 << i;
        for &(rm, rc) in &reduced {
            let h = 63 - rm.leading_zeros();
            if mask >> h & 1 == 1 {
                mask ^= rm;
                combo ^= rc;
            }
        }
        debug_assert_ne!(mask, 0);
        reduced.push((mask, combo));
        reduced.sort_by_key(|&(m, _)| std::cmp::Reverse(m));
    }
    let coords_in_basis = |v: u64| -> u64 {
        let mut mask = v;
        let mut combo = 0u64;
        for &(rm, rc) in &reduced {
            let h = 63 - rm.leading_zeros();
            if mask >> h & 1 == 1 {
                mask ^= rm;
                combo ^= rc;
            }
        }
        debug_assert_eq!(mask, 0, "basis spans the space");
        combo
    };

    let quotient = real_universal_skeleton(l - k, l.saturating_sub(k + 1))?;

    // q: link vertex -> nonzero coordinates past the sigma block.
    let q_image: Vec<usize> = link_vertex_masks
        .iter()
        .map(|&mask| {
            let c = coords_in_basis(mask) >> k;
            debug_assert_ne!(c, 0, "link vertices are independent of sigma");
            (c - 1) as usize
        })
        .collect();
    // p: vector of GF(2)^{l-k} -> combination of the completed basis vectors.
    let p_image: Vec<usize> = (0..quotient.m())
        .map(|i| {
            let w = i as u64 + 1;
            let mut mask = 0u64;
            for (j, &b) in basis.iter().enumerate().skip(k) {
                if w >> (j - k) & 1 == 1 {
                    mask ^= b;
                }
            }
            link_index(mask)
        })
        .collect();

    let p = VertexMap::new(quotient.clone(), link.clone(), p_image).expect("p well formed");
    let q = VertexMap::new(link.clone(), quotient, q_image).expect("q well formed");
    Ok(LinkEquivalence { link, link_vertex_masks, p, q })
}

/// The block embedding `RU_l ∗ RU_k -> RU_{l+k}`: first-factor vectors are
/// padded with zeros on top, second-factor vectors are shifted past the first
/// block. Nondegenerate by the block structure.
pub fn join_embedding(l: usize, k: usize) -> Result<VertexMap, UniversalError> {
    if l == 0 || k == 0 || l + k > MAX_FULL_RANK {
        return Err(UniversalError::TooLarge {
            l: l + k,
            cap: MAX_FULL_RANK,
        });
    }
    let left = real_universal_skeleton(l, l - 1)?;
    let right = real_universal_skeleton(k, k - 1)?;
    let source = left.join(&right);
    let target = real_universal_skeleton(l + k, l + k - 1)?;
    let nl = (1usize << l) - 1;
    let image: Vec<usize> = (0..source.m())
        .map(|v| {
            let mask = if v < nl {
                v as u64 + 1
            } else {
                ((v - nl) as u64 + 1) << l
            };
            (mask - 1) as usize
        })
        .collect();
    let map = VertexMap::new(source, target, image).expect("join embedding well formed");
    debug_assert!(crate::complex::is_nondegenerate_map(&map));
    Ok(map)
}
