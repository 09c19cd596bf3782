//! Finite simplicial complexes stored by their maximal simplices, structural
//! operations (skeleton, join, link), simplicial maps with nondegeneracy, an
//! existence search for nondegenerate maps between small complexes, and exact
//! graph chromatic numbers.
//!
//! Vertices are dense 0-based integers. A simplex is a strictly increasing
//! vertex list; membership of an arbitrary simplex is "is a subset of some
//! facet", which downward closure makes complete. Complexes here are small,
//! so clarity wins over asymptotics everywhere except the searches.

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::budget::{Budget, SearchOutcome};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("a complex needs at least one vertex")]
    NoVertices,
    #[error("vertex id {id} out of range for m = {m}")]
    VertexOutOfRange { id: usize, m: usize },
    #[error("simplex {0:?} is not in the complex")]
    MissingSimplex(Vec<usize>),
    #[error("vertex map image has length {got}, source has {want} vertices")]
    ImageLengthMismatch { got: usize, want: usize },
}

/// A simplex: a strictly increasing sequence of vertex ids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    /// Builds a simplex from any vertex list; duplicates collapse (vertex
    /// sets, not sequences) and the result is sorted.
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Simplex(v)
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn cardinality(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Subset test on sorted vertex lists.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }
}

/// Runs `f` on every k-subset of `items`.
pub(crate) fn for_each_combination<T: Copy>(items: &[T], k: usize, f: &mut impl FnMut(&[T])) {
    fn rec<T: Copy>(items: &[T], k: usize, start: usize, acc: &mut Vec<T>, f: &mut impl FnMut(&[T])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        let needed = k - acc.len();
        for i in start..=items.len().saturating_sub(needed) {
            acc.push(items[i]);
            rec(items, k, i + 1, acc, f);
            acc.pop();
        }
    }
    if k <= items.len() {
        rec(items, k, 0, &mut Vec::with_capacity(k), f);
    }
}

/// A finite simplicial complex on vertices `0..m`, stored by its facets
/// (maximal simplices). Every vertex appears in some facet; isolated vertices
/// are materialized as singleton facets.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex {
    m: usize,
    facets: Vec<Simplex>,
}

impl SimplicialComplex {
    /// Builds a complex from a facet list: facets are deduplicated,
    /// inclusion-maximalized and stored sorted; vertices listed in no facet
    /// become singleton facets.
    pub fn new(m: usize, facets: Vec<Vec<usize>>) -> Result<Self, ComplexError> {
        if m == 0 {
            return Err(ComplexError::NoVertices);
        }
        let mut candidates: BTreeSet<Simplex> = BTreeSet::new();
        let mut covered = vec![false; m];
        for f in facets {
            for &v in &f {
                if v >= m {
                    return Err(ComplexError::VertexOutOfRange { id: v, m });
                }
                covered[v] = true;
            }
            let s = Simplex::new(f);
            if !s.is_empty() {
                candidates.insert(s);
            }
        }
        for (v, &c) in covered.iter().enumerate() {
            if !c {
                candidates.insert(Simplex::new([v]));
            }
        }
        // Drop facets contained in a strictly larger one. Candidates are
        // distinct, so only strictly larger sets can absorb.
        let all: Vec<Simplex> = candidates.into_iter().collect();
        let maximal: Vec<Simplex> = all
            .iter()
            .filter(|s| {
                !all.iter()
                    .any(|t| t.cardinality() > s.cardinality() && s.is_face_of(t))
            })
            .cloned()
            .collect();
        Ok(SimplicialComplex { m, facets: maximal })
    }

    /// Internal constructor for operations that produce facet lists already
    /// known to be distinct and mutually non-containing.
    pub(crate) fn from_maximal_trusted(m: usize, mut facets: Vec<Simplex>) -> Self {
        facets.sort_unstable();
        debug_assert!(facets.windows(2).all(|w| w[0] != w[1]));
        SimplicialComplex { m, facets }
    }

    /// The empty complex (no vertices). Never produced by [`Self::new`]; it
    /// arises as a degenerate link and as the universal complex at rank 0.
    pub(crate) fn empty() -> Self {
        SimplicialComplex { m: 0, facets: Vec::new() }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    /// Max over facets of cardinality minus one; `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.cardinality() - 1).max()
    }

    /// Membership: a simplex lies in the complex iff it is a subset of some
    /// facet.
    pub fn contains(&self, s: &Simplex) -> bool {
        self.facets.iter().any(|f| s.is_face_of(f))
    }

    /// All simplices of dimension exactly `d`, enumerated from the facets.
    pub fn simplices_of_dimension(&self, d: usize) -> BTreeSet<Simplex> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            for_each_combination(f.vertices(), d + 1, &mut |c| {
                out.insert(Simplex(c.to_vec()));
            });
        }
        out
    }

    /// The edge set of the 1-skeleton.
    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            let vs = f.vertices();
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    out.insert((vs[i], vs[j]));
                }
            }
        }
        out
    }

    /// All simplices of dimension at most `d`. Facets of the result are the
    /// `(d+1)`-subsets of larger facets together with the small facets, which
    /// maximality of the input keeps mutually non-containing.
    pub fn skeleton(&self, d: usize) -> SimplicialComplex {
        if self.dimension().is_none_or(|dim| dim <= d) {
            return self.clone();
        }
        let mut out: BTreeSet<Simplex> = BTreeSet::new();
        for f in &self.facets {
            if f.cardinality() <= d + 1 {
                out.insert(f.clone());
            } else {
                for_each_combination(f.vertices(), d + 1, &mut |c| {
                    out.insert(Simplex(c.to_vec()));
                });
            }
        }
        SimplicialComplex::from_maximal_trusted(self.m, out.into_iter().collect())
    }

    /// Join of two complexes. Vertices of `other` are reindexed by `+self.m`;
    /// facets are all unions of a facet of `self` with a facet of `other`.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                let mut v = f.0.clone();
                v.extend(g.vertices().iter().map(|&w| w + self.m));
                facets.push(Simplex(v));
            }
        }
        if self.facets.is_empty() {
            facets = other
                .facets
                .iter()
                .map(|g| Simplex(g.vertices().iter().map(|&w| w + self.m).collect()))
                .collect();
        } else if other.facets.is_empty() {
            facets = self.facets.clone();
        }
        SimplicialComplex::from_maximal_trusted(self.m + other.m, facets)
    }

    /// Link of a simplex: the complex on `{v : σ ∪ {v} ∈ K}` whose simplices
    /// are the `τ` disjoint from `σ` with `τ ⊔ σ ∈ K`. Vertices are densely
    /// reindexed; the returned map sends link vertex indices to original ids.
    pub fn link(&self, sigma: &Simplex) -> Result<Link, ComplexError> {
        if !self.contains(sigma) {
            return Err(ComplexError::MissingSimplex(sigma.vertices().to_vec()));
        }
        let mut vertex_ids: Vec<usize> = Vec::new();
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for f in &self.facets {
            if sigma.is_face_of(f) {
                let rest: Vec<usize> = f
                    .vertices()
                    .iter()
                    .copied()
                    .filter(|v| !sigma.contains_vertex(*v))
                    .collect();
                for &v in &rest {
                    if !vertex_ids.contains(&v) {
                        vertex_ids.push(v);
                    }
                }
                if !rest.is_empty() {
                    facets.push(rest);
                }
            }
        }
        vertex_ids.sort_unstable();
        let reindex = |v: usize| vertex_ids.binary_search(&v).expect("link vertex");
        let facets: Vec<Simplex> = facets
            .into_iter()
            .map(|f| Simplex(f.into_iter().map(reindex).collect()))
            .collect();
        let complex = if vertex_ids.is_empty() {
            SimplicialComplex::empty()
        } else {
            // Facets of K containing sigma stay maximal and distinct after
            // removing sigma.
            SimplicialComplex::from_maximal_trusted(vertex_ids.len(), facets)
        };
        Ok(Link { complex, vertex_ids })
    }

    /// Relabels vertices by `perm` (old id -> new id). Test and demo helper.
    pub fn relabel(&self, perm: &[usize]) -> SimplicialComplex {
        assert_eq!(perm.len(), self.m);
        let facets = self
            .facets
            .iter()
            .map(|f| Simplex::new(f.vertices().iter().map(|&v| perm[v])))
            .collect();
        let mut sorted: Vec<Simplex> = facets;
        sorted.sort_unstable();
        SimplicialComplex { m: self.m, facets: sorted }
    }
}

/// Result of [`SimplicialComplex::link`]: the link complex plus the dense
/// reindexing (link vertex index -> original vertex id).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Link {
    pub complex: SimplicialComplex,
    pub vertex_ids: Vec<usize>,
}

/// A vertex map between two complexes, the carrier for simplicial maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    source: SimplicialComplex,
    target: SimplicialComplex,
    image: Vec<usize>,
}

impl VertexMap {
    pub fn new(
        source: SimplicialComplex,
        target: SimplicialComplex,
        image: Vec<usize>,
    ) -> Result<Self, ComplexError> {
        if image.len() != source.m() {
            return Err(ComplexError::ImageLengthMismatch {
                got: image.len(),
                want: source.m(),
            });
        }
        for &w in &image {
            if w >= target.m() {
                return Err(ComplexError::VertexOutOfRange { id: w, m: target.m() });
            }
        }
        Ok(VertexMap { source, target, image })
    }

    pub fn source(&self) -> &SimplicialComplex {
        &self.source
    }

    pub fn target(&self) -> &SimplicialComplex {
        &self.target
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    /// Composition `other ∘ self`; the target of `self` must be the source of
    /// `other`.
    pub fn compose(&self, other: &VertexMap) -> Result<VertexMap, ComplexError> {
        let image = self.image.iter().map(|&v| other.image[v]).collect();
        VertexMap::new(self.source.clone(), other.target.clone(), image)
    }
}

/// True iff the map sends every simplex to a simplex of the same cardinality:
/// injective on each facet with the image simplex in the target. Downward
/// closure makes checking facets sufficient.
pub fn is_nondegenerate_map(f: &VertexMap) -> bool {
    for facet in f.source.facets() {
        let imgs: BTreeSet<usize> = facet.vertices().iter().map(|&v| f.image[v]).collect();
        if imgs.len() != facet.cardinality() {
            return false;
        }
        if !f.target.contains(&Simplex(imgs.into_iter().collect())) {
            return false;
        }
    }
    true
}

/// Backtracking existence search for a nondegenerate map from `source` to
/// `target`. Vertices of a maximum-cardinality facet are assigned first and
/// candidate images run in increasing target-vertex order, so the witness is
/// deterministic. `Exhausted` means the full tree was searched.
pub fn exists_nondegenerate_map(
    source: &SimplicialComplex,
    target: &SimplicialComplex,
    budget: &Budget,
) -> SearchOutcome<VertexMap> {
    if source.m() == 0 {
        let map = VertexMap::new(source.clone(), target.clone(), Vec::new()).expect("empty map");
        return SearchOutcome::Found(map);
    }
    if target.m() == 0 {
        return SearchOutcome::Exhausted;
    }
    let order = assignment_order(source);
    let mut image = vec![usize::MAX; source.m()];
    // facets_of[v]: indices of facets containing v
    let facets_of: Vec<Vec<usize>> = (0..source.m())
        .map(|v| {
            source
                .facets()
                .iter()
                .enumerate()
                .filter(|(_, f)| f.contains_vertex(v))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();

    fn feasible(
        source: &SimplicialComplex,
        target: &SimplicialComplex,
        facets_of: &[Vec<usize>],
        image: &[usize],
        v: usize,
        cand: usize,
    ) -> bool {
        for &fi in &facets_of[v] {
            let facet = &source.facets()[fi];
            let mut imgs: Vec<usize> = facet
                .vertices()
                .iter()
                .filter(|&&u| u != v && image[u] != usize::MAX)
                .map(|&u| image[u])
                .collect();
            if imgs.contains(&cand) {
                return false;
            }
            imgs.push(cand);
            imgs.sort_unstable();
            imgs.dedup();
            if !target.contains(&Simplex(imgs)) {
                return false;
            }
        }
        true
    }

    fn search(
        source: &SimplicialComplex,
        target: &SimplicialComplex,
        facets_of: &[Vec<usize>],
        order: &[usize],
        depth: usize,
        image: &mut [usize],
        budget: &Budget,
    ) -> SearchOutcome<()> {
        if depth == order.len() {
            return SearchOutcome::Found(());
        }
        let v = order[depth];
        for cand in 0..target.m() {
            if !budget.tick() {
                return SearchOutcome::OutOfBudget;
            }
            if feasible(source, target, facets_of, image, v, cand) {
                image[v] = cand;
                match search(source, target, facets_of, order, depth + 1, image, budget) {
                    SearchOutcome::Found(()) => return SearchOutcome::Found(()),
                    SearchOutcome::OutOfBudget => return SearchOutcome::OutOfBudget,
                    SearchOutcome::Exhausted => {}
                }
                image[v] = usize::MAX;
            }
        }
        SearchOutcome::Exhausted
    }

    match search(source, target, &facets_of, &order, 0, &mut image, budget) {
        SearchOutcome::Found(()) => {
            let map = VertexMap::new(source.clone(), target.clone(), image)
                .expect("search image is total");
            debug_assert!(is_nondegenerate_map(&map));
            SearchOutcome::Found(map)
        }
        SearchOutcome::Exhausted => SearchOutcome::Exhausted,
        SearchOutcome::OutOfBudget => SearchOutcome::OutOfBudget,
    }
}

/// Assignment order: a maximum-cardinality facet first, then greedily the
/// vertex sharing the most facets with already placed ones.
pub(crate) fn assignment_order(source: &SimplicialComplex) -> Vec<usize> {
    let m = source.m();
    let max_facet = source
        .facets()
        .iter()
        .max_by_key(|f| f.cardinality())
        .cloned()
        .unwrap_or_else(Simplex::empty);
    let mut order: Vec<usize> = max_facet.vertices().to_vec();
    let mut placed = vec![false; m];
    for &v in &order {
        placed[v] = true;
    }
    while order.len() < m {
        let next = (0..m)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let shared = source
                    .facets()
                    .iter()
                    .filter(|f| {
                        f.contains_vertex(v)
                            && f.vertices().iter().any(|&u| placed[u])
                    })
                    .count();
                let total = source
                    .facets()
                    .iter()
                    .filter(|f| f.contains_vertex(v))
                    .count();
                (shared, total, std::cmp::Reverse(v))
            })
            .expect("unplaced vertex exists");
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Chromatic bounds; exact when `lower == upper`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Chromatic {
    pub lower: usize,
    pub upper: usize,
}

impl Chromatic {
    pub fn exact(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.lower)
    }
}

/// Default vertex-count cap for the exact chromatic search.
pub const CHROMATIC_EXACT_LIMIT: usize = 40;

/// Chromatic number of the 1-skeleton, by branch and bound over a greedy
/// clique lower bound and a greedy coloring upper bound. Equals the minimal
/// `i` admitting a nondegenerate map into the `(i-1)`-simplex. Beyond the
/// exact limit the certified bound pair is returned as-is (still exact
/// whenever the two greedy bounds already meet).
pub fn chromatic_number(k: &SimplicialComplex) -> Chromatic {
    chromatic_number_with_limit(k, CHROMATIC_EXACT_LIMIT)
}

pub fn chromatic_number_with_limit(k: &SimplicialComplex, limit: usize) -> Chromatic {
    let m = k.m();
    if m == 0 {
        return Chromatic { lower: 0, upper: 0 };
    }
    let edges = k.edges();
    if edges.is_empty() {
        return Chromatic { lower: 1, upper: 1 };
    }
    let mut adj = vec![HashSet::new(); m];
    for &(a, b) in &edges {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let mut by_degree: Vec<usize> = (0..m).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(adj[v].len()));

    // Greedy clique.
    let mut clique: Vec<usize> = Vec::new();
    for &v in &by_degree {
        if clique.iter().all(|&u| adj[v].contains(&u)) {
            clique.push(v);
        }
    }
    let lower = clique.len();

    // Greedy first-fit coloring in degree order.
    let mut color = vec![usize::MAX; m];
    let mut upper = 0;
    for &v in &by_degree {
        let used: HashSet<usize> = adj[v]
            .iter()
            .filter(|&&u| color[u] != usize::MAX)
            .map(|&u| color[u])
            .collect();
        let c = (0..).find(|c| !used.contains(c)).expect("free color");
        color[v] = c;
        upper = upper.max(c + 1);
    }

    if lower == upper || m > limit || m > 64 {
        return Chromatic { lower, upper };
    }

    // Exact search: adjacency bitmasks, clique precolored, saturation-first.
    let adj_mask: Vec<u64> = (0..m)
        .map(|v| adj[v].iter().fold(0u64, |acc, &u| acc | (1 << u)))
        .collect();
    for kcols in lower..upper {
        if k_colorable(&adj_mask, &clique, kcols) {
            return Chromatic { lower: kcols, upper: kcols };
        }
    }
    Chromatic { lower: upper, upper }
}

fn k_colorable(adj: &[u64], clique: &[usize], k: usize) -> bool {
    let m = adj.len();
    if clique.len() > k {
        return false;
    }
    let mut color: Vec<usize> = vec![usize::MAX; m];
    let mut used = 0usize;
    for (c, &v) in clique.iter().enumerate() {
        color[v] = c;
        used = used.max(c + 1);
    }
    fn rec(adj: &[u64], color: &mut [usize], used: usize, k: usize) -> bool {
        let m = adj.len();
        // Most-saturated uncolored vertex; ties broken by degree then index.
        let mut pick = None;
        let mut best = (0usize, 0usize);
        for v in 0..m {
            if color[v] != usize::MAX {
                continue;
            }
            let mut seen = 0u64;
            let mut nb = adj[v];
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if color[u] != usize::MAX {
                    seen |= 1 << color[u];
                }
            }
            let sat = seen.count_ones() as usize;
            let deg = adj[v].count_ones() as usize;
            if pick.is_none() || (sat, deg) > best {
                pick = Some((v, seen));
                best = (sat, deg);
            }
        }
        let Some((v, seen)) = pick else {
            return true;
        };
        let cap = (used + 1).min(k);
        for c in 0..cap {
            if seen >> c & 1 == 1 {
                continue;
            }
            color[v] = c;
            if rec(adj, color, used.max(c + 1), k) {
                return true;
            }
            color[v] = usize::MAX;
        }
        false
    }
    rec(adj, &mut color, used, k)
}
