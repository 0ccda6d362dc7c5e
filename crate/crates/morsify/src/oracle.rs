//! Direct enumeration of morsification components and the walls between
//! them.
//!
//! A component of the space of very nice M-morsifications of `B_n^l` is
//! pinned down by finite data. The real line is cut by the `n - 1` critical
//! points `x_1 < ... < x_{n-1}` into segments `S_0, ..., S_{n-1}`, whose
//! monotonicity alternates and is forced at the right end (monic: `S_{n-1}`
//! increases, so segment `k` increases exactly when `n - 1 - k` is even).
//! The data of a [`ComponentType`] is then
//!
//! * `assignment`: which segment each of the `l` labelled boundary points
//!   sits on,
//! * `ranks`: the relative order of all `n - 1 + l` atom values (critical
//!   values `c_1, ..., c_{n-1}` and boundary values `v_1, ..., v_l`).
//!
//! Valid rank orders make the critical values a snake (alternating according
//! to the segment directions) and keep every boundary value strictly inside
//! its segment's value interval. Positions of boundary points along a
//! segment are not part of the data: the segment is monotone, so they are
//! forced by the value order.
//!
//! Three backends answer "how many components":
//!
//! * [`count_components_naive`]: scan every assignment and every rank
//!   bijection against the validity predicate (ground truth, smallest guard),
//! * [`count_components`]: per snake, each boundary label lands in one of the
//!   `n` rank gaps between consecutive critical values; a gap covered by
//!   `w_g` segments absorbs labels with weight `w_g` and `m` labels sharing a
//!   gap order themselves in `m!` ways, so the snake contributes
//!   `l! [t^l] prod_g 1/(1 - w_g t)`,
//! * [`enumerate_components`]: materializes the same objects the second
//!   backend counts.
//!
//! [`neighbors`] classifies the codimension-one walls reachable from a
//! component. Each wall corresponds to a rank-adjacent pair of atoms meeting
//! in value, and the pair determines the stratum:
//!
//! * two critical values of non-adjacent critical points merge: an ordinary
//!   Maxwell wall (`b`), crossed by transposing the pair;
//! * two critical values of adjacent critical points merge: the exterior
//!   caustic (`f`), the boundary of the M-domain, with no component on the
//!   other side;
//! * a boundary value meets the critical value of an endpoint of its own
//!   segment: a boundary caustic wall (`a`). The boundary point slides
//!   through the critical point onto the adjacent segment; its value stays
//!   on the same side of the critical value (the difference vanishes to
//!   second order at the crossing), so the ranks are unchanged and only the
//!   assignment moves;
//! * a boundary value meets a critical value from elsewhere: a boundary
//!   Maxwell wall (`c`), crossed by transposing the pair;
//! * two boundary values on one segment meet: a double boundary caustic
//!   (`d`); on different segments: a double boundary Maxwell (`e`); both
//!   crossed by transposing the pair.

use std::collections::BTreeSet;

use crate::error::{check_guard, Error, Result};
use crate::euler::foreach_permutation;
use crate::series::factorial;
use crate::Count;

/// Default atom bound (`n - 1 + l`) for [`enumerate_components`] and
/// [`adjacency_graph`].
pub const ENUMERATE_ATOM_GUARD: u32 = 10;
/// Atom bound for the exhaustive backend.
pub const NAIVE_ATOM_GUARD: u32 = 8;
/// Bound on `n^l`, the number of assignments the exhaustive backend scans.
pub const NAIVE_ASSIGNMENT_GUARD: u64 = 1_000_000;
/// Atom bound for the per-snake counting backend.
pub const DP_ATOM_GUARD: u32 = 14;

/// Segment `k` of `n` increases exactly when `n - 1 - k` is even.
fn increasing(n: u32, segment: u32) -> bool {
    (n - 1 - segment) % 2 == 0
}

/// The validity predicate on raw data: snake order on the critical values,
/// betweenness for every boundary value.
fn ranks_valid(n: u32, assignment: &[u8], ranks: &[u8]) -> bool {
    let ncrit = (n - 1) as usize;
    for k in 1..ncrit {
        let ascends = ranks[k - 1] < ranks[k];
        if ascends != increasing(n, k as u32) {
            return false;
        }
    }
    if n == 1 {
        return true;
    }
    for (j, &seg) in assignment.iter().enumerate() {
        let r = ranks[ncrit + j];
        let k = seg as usize;
        if k == 0 {
            let c1 = ranks[0];
            let ok = if increasing(n, 0) { r < c1 } else { r > c1 };
            if !ok {
                return false;
            }
        } else if k == ncrit {
            if r < ranks[ncrit - 1] {
                return false;
            }
        } else {
            let (a, b) = (ranks[k - 1], ranks[k]);
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            if r <= lo || r >= hi {
                return false;
            }
        }
    }
    true
}

/// The combinatorial data of one component.
///
/// Atoms are indexed `c_1, ..., c_{n-1}` then `v_1, ..., v_l`; `ranks` maps
/// each atom to its position (1-based) in the total value order. The derived
/// ordering sorts a listing by (assignment, ranks), the canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentType {
    n: u32,
    l: u32,
    assignment: Vec<u8>,
    ranks: Vec<u8>,
}

impl ComponentType {
    /// Validates and wraps raw data; rejects anything that is not the data
    /// of an actual component.
    pub fn new(n: u32, l: u32, assignment: Vec<u8>, ranks: Vec<u8>) -> Result<ComponentType> {
        if n < 1 {
            return Err(Error::domain("n must be at least 1"));
        }
        let atoms = (n as u64 - 1 + l as u64) as usize;
        if atoms > u8::MAX as usize {
            return Err(Error::domain("too many atoms for a component type"));
        }
        if assignment.len() != l as usize {
            return Err(Error::domain(format!(
                "assignment length {} does not match l = {l}",
                assignment.len()
            )));
        }
        if assignment.iter().any(|&k| (k as u32) >= n) {
            return Err(Error::domain("assignment refers to a segment out of range"));
        }
        if ranks.len() != atoms {
            return Err(Error::domain(format!(
                "rank vector length {} does not match n - 1 + l = {atoms}",
                ranks.len()
            )));
        }
        let mut seen = vec![false; atoms + 1];
        for &r in &ranks {
            if r == 0 || r as usize > atoms || seen[r as usize] {
                return Err(Error::domain("ranks are not a bijection onto 1..=n-1+l"));
            }
            seen[r as usize] = true;
        }
        if !ranks_valid(n, &assignment, &ranks) {
            return Err(Error::domain(
                "ranks violate the snake or betweenness constraints",
            ));
        }
        Ok(ComponentType {
            n,
            l,
            assignment,
            ranks,
        })
    }

    fn new_unchecked(n: u32, l: u32, assignment: Vec<u8>, ranks: Vec<u8>) -> ComponentType {
        debug_assert!(ranks_valid(n, &assignment, &ranks));
        ComponentType {
            n,
            l,
            assignment,
            ranks,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn atom_count(&self) -> usize {
        self.ranks.len()
    }

    /// Segment of boundary label `j` (1-based).
    pub fn segment_of(&self, j: u32) -> u32 {
        self.assignment[j as usize - 1] as u32
    }

    pub fn assignment(&self) -> &[u8] {
        &self.assignment
    }

    /// Rank of critical value `c_i` (1-based `i`).
    pub fn critical_rank(&self, i: u32) -> u8 {
        self.ranks[i as usize - 1]
    }

    /// Rank of boundary value `v_j` (1-based `j`).
    pub fn boundary_rank(&self, j: u32) -> u8 {
        self.ranks[(self.n - 1 + j) as usize - 1]
    }

    pub fn ranks(&self) -> &[u8] {
        &self.ranks
    }

    /// Stable text form: assignment and rank vector, `|`-separated.
    pub fn canonical_id(&self) -> String {
        let join = |v: &[u8]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        format!("{}|{}", join(&self.assignment), join(&self.ranks))
    }
}

/// Wall strata between (or bounding) components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WallType {
    /// `a`: a boundary point crosses a critical point of its segment.
    BoundaryCaustic,
    /// `b`: critical values of non-adjacent critical points meet.
    OrdinaryMaxwell,
    /// `c`: a boundary value meets a critical value from elsewhere.
    BoundaryMaxwell,
    /// `d`: two boundary values on one segment meet.
    DoubleBoundaryCaustic,
    /// `e`: boundary values on different segments meet.
    DoubleBoundaryMaxwell,
    /// `f`: adjacent critical points collapse; the exterior caustic bounding
    /// the M-domain. Never an interior wall.
    OrdinaryCaustic,
}

impl WallType {
    pub fn tag(self) -> char {
        match self {
            WallType::BoundaryCaustic => 'a',
            WallType::OrdinaryMaxwell => 'b',
            WallType::BoundaryMaxwell => 'c',
            WallType::DoubleBoundaryCaustic => 'd',
            WallType::DoubleBoundaryMaxwell => 'e',
            WallType::OrdinaryCaustic => 'f',
        }
    }
}

fn require_shape(n: u32) -> Result<()> {
    if n < 1 {
        return Err(Error::domain("n must be at least 1"));
    }
    Ok(())
}

fn atoms(n: u32, l: u32) -> u64 {
    n as u64 - 1 + l as u64
}

/// Visits the rank vector of every snake on the `n - 1` critical values.
fn foreach_snake(n: u32, visit: &mut impl FnMut(&[u8])) {
    let ncrit = (n - 1) as usize;
    if ncrit == 0 {
        visit(&[]);
        return;
    }
    let mut ranks = vec![0u8; ncrit];
    let mut used = vec![false; ncrit + 1];
    snake_rec(n, 0, &mut ranks, &mut used, visit);
}

fn snake_rec(
    n: u32,
    pos: usize,
    ranks: &mut Vec<u8>,
    used: &mut Vec<bool>,
    visit: &mut impl FnMut(&[u8]),
) {
    let ncrit = ranks.len();
    if pos == ncrit {
        visit(ranks);
        return;
    }
    for r in 1..=ncrit as u8 {
        if used[r as usize] {
            continue;
        }
        if pos > 0 {
            let ascends = ranks[pos - 1] < r;
            if ascends != increasing(n, pos as u32) {
                continue;
            }
        }
        used[r as usize] = true;
        ranks[pos] = r;
        snake_rec(n, pos + 1, ranks, used, visit);
        used[r as usize] = false;
    }
}

/// For each of the `n` rank gaps (below, between, above the `n - 1` critical
/// ranks), how many segments' value intervals cover it.
fn gap_weights(n: u32, crit_ranks: &[u8]) -> Vec<u32> {
    let ncrit = crit_ranks.len();
    let gaps = ncrit + 1;
    let mut w = vec![0u32; gaps];
    if n == 1 {
        w[0] = 1;
        return w;
    }
    let r1 = crit_ranks[0] as usize;
    if increasing(n, 0) {
        for g in w.iter_mut().take(r1) {
            *g += 1;
        }
    } else {
        for g in w.iter_mut().skip(r1) {
            *g += 1;
        }
    }
    for k in 1..ncrit {
        let (a, b) = (crit_ranks[k - 1] as usize, crit_ranks[k] as usize);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        for g in w.iter_mut().take(hi).skip(lo) {
            *g += 1;
        }
    }
    let rl = crit_ranks[ncrit - 1] as usize;
    for g in w.iter_mut().skip(rl) {
        *g += 1;
    }
    w
}

/// Gap indices covered by segment `k`'s value interval.
fn allowed_gaps(n: u32, crit_ranks: &[u8], k: u32) -> Vec<u8> {
    let ncrit = crit_ranks.len();
    let gaps = ncrit + 1;
    if n == 1 {
        return vec![0];
    }
    let range = if k == 0 {
        let r1 = crit_ranks[0] as usize;
        if increasing(n, 0) {
            0..r1
        } else {
            r1..gaps
        }
    } else if k as usize == ncrit {
        crit_ranks[ncrit - 1] as usize..gaps
    } else {
        let (a, b) = (crit_ranks[k as usize - 1] as usize, crit_ranks[k as usize] as usize);
        if a < b {
            a..b
        } else {
            b..a
        }
    };
    range.map(|g| g as u8).collect()
}

/// Component count by the per-snake gap method.
pub fn count_components(n: u32, l: u32) -> Result<Count> {
    require_shape(n)?;
    check_guard("dp_atoms", atoms(n, l), DP_ATOM_GUARD as u64)?;
    let ll = l as usize;
    let mut snake_sum = Count::from(0);
    foreach_snake(n, &mut |crit_ranks| {
        let w = gap_weights(n, crit_ranks);
        // h_l(w) = [t^l] prod_g 1/(1 - w_g t), folded in one coefficient
        // vector. Within the guard the values fit u128 comfortably.
        let mut h = vec![0u128; ll + 1];
        h[0] = 1;
        for &wg in &w {
            if wg == 0 {
                continue;
            }
            for j in 1..=ll {
                h[j] += wg as u128 * h[j - 1];
            }
        }
        snake_sum += Count::from(h[ll]);
    });
    Ok(snake_sum * factorial(ll))
}

/// Component count by brute force: every assignment against every rank
/// bijection, filtered by the validity predicate. Ground truth.
pub fn count_components_naive(n: u32, l: u32) -> Result<Count> {
    require_shape(n)?;
    check_guard("naive_atoms", atoms(n, l), NAIVE_ATOM_GUARD as u64)?;
    let assignments = (n as u128).checked_pow(l).unwrap_or(u128::MAX);
    check_guard(
        "naive_assignments",
        assignments.min(u64::MAX as u128) as u64,
        NAIVE_ASSIGNMENT_GUARD,
    )?;
    let total_atoms = atoms(n, l) as usize;
    let mut assignment = vec![0u8; l as usize];
    let mut ranks: Vec<u8> = (1..=total_atoms as u8).collect();
    let mut count = 0u64;
    loop {
        foreach_permutation(&mut ranks, &mut |perm| {
            if ranks_valid(n, &assignment, perm) {
                count += 1;
            }
        });
        // Odometer over assignments, least significant label first.
        let mut j = 0;
        loop {
            if j == assignment.len() {
                return Ok(Count::from(count));
            }
            assignment[j] += 1;
            if (assignment[j] as u32) < n {
                break;
            }
            assignment[j] = 0;
            j += 1;
        }
    }
}

/// All components of `(n, l)` in canonical order, under the default guard.
pub fn enumerate_components(n: u32, l: u32) -> Result<Vec<ComponentType>> {
    enumerate_components_with_guard(n, l, ENUMERATE_ATOM_GUARD)
}

/// All components of `(n, l)` in canonical order.
pub fn enumerate_components_with_guard(
    n: u32,
    l: u32,
    max_atoms: u32,
) -> Result<Vec<ComponentType>> {
    require_shape(n)?;
    check_guard("enumerate_atoms", atoms(n, l), max_atoms as u64)?;
    let mut out = Vec::new();
    let ll = l as usize;
    foreach_snake(n, &mut |crit_ranks| {
        let allowed: Vec<Vec<u8>> = (0..n).map(|k| allowed_gaps(n, crit_ranks, k)).collect();
        let mut placement = EnumState {
            n,
            l,
            crit_ranks,
            allowed: &allowed,
            seg_choice: vec![0u8; ll],
            gap_choice: vec![0u8; ll],
            orders: vec![Vec::new(); crit_ranks.len() + 1],
            out: &mut out,
        };
        place_label(&mut placement, 0);
    });
    out.sort_unstable();
    Ok(out)
}

struct EnumState<'a> {
    n: u32,
    l: u32,
    crit_ranks: &'a [u8],
    allowed: &'a [Vec<u8>],
    seg_choice: Vec<u8>,
    gap_choice: Vec<u8>,
    orders: Vec<Vec<u8>>,
    out: &'a mut Vec<ComponentType>,
}

fn place_label(state: &mut EnumState, j: usize) {
    if j == state.l as usize {
        order_gap(state, 0);
        return;
    }
    for k in 0..state.n {
        for gi in 0..state.allowed[k as usize].len() {
            state.seg_choice[j] = k as u8;
            state.gap_choice[j] = state.allowed[k as usize][gi];
            place_label(state, j + 1);
        }
    }
}

fn order_gap(state: &mut EnumState, g: usize) {
    if g == state.orders.len() {
        emit(state);
        return;
    }
    let members: Vec<u8> = (0..state.l as u8)
        .filter(|&j| state.gap_choice[j as usize] == g as u8)
        .collect();
    if members.len() <= 1 {
        state.orders[g] = members;
        order_gap(state, g + 1);
        return;
    }
    let mut items = members;
    foreach_permutation(&mut items, &mut |perm| {
        // Borrow dance: the permutation buffer lives outside the state.
        state.orders[g] = perm.to_vec();
        order_gap(state, g + 1);
    });
}

fn emit(state: &mut EnumState) {
    let ncrit = state.crit_ranks.len();
    let total = ncrit + state.l as usize;
    // Critical atom that owns each snake rank.
    let mut crit_at_rank = vec![0usize; ncrit + 1];
    for (i, &r) in state.crit_ranks.iter().enumerate() {
        crit_at_rank[r as usize] = i;
    }
    let mut ranks = vec![0u8; total];
    let mut next = 1u8;
    for g in 0..=ncrit {
        for &label in &state.orders[g] {
            ranks[ncrit + label as usize] = next;
            next += 1;
        }
        if g < ncrit {
            ranks[crit_at_rank[g + 1]] = next;
            next += 1;
        }
    }
    state.out.push(ComponentType::new_unchecked(
        state.n,
        state.l,
        state.seg_choice.clone(),
        ranks,
    ));
}

/// Interior walls of a component: the neighbor on the other side of each
/// wall, tagged by stratum. Exterior caustic contacts are not neighbors; see
/// [`exterior_contacts`].
pub fn neighbors(ct: &ComponentType) -> Vec<(ComponentType, WallType)> {
    let total = ct.ranks.len();
    let ncrit = (ct.n - 1) as usize;
    let mut atom_at_rank = vec![0usize; total + 1];
    for (a, &r) in ct.ranks.iter().enumerate() {
        atom_at_rank[r as usize] = a;
    }
    let mut out = Vec::new();
    for r in 1..total {
        let a1 = atom_at_rank[r];
        let a2 = atom_at_rank[r + 1];
        let wall = match (a1 < ncrit, a2 < ncrit) {
            (true, true) => {
                if a1.abs_diff(a2) == 1 {
                    // Adjacent critical points: the exterior caustic.
                    continue;
                }
                let mut ranks = ct.ranks.clone();
                ranks.swap(a1, a2);
                (
                    ComponentType::new_unchecked(ct.n, ct.l, ct.assignment.clone(), ranks),
                    WallType::OrdinaryMaxwell,
                )
            }
            (false, false) => {
                let (j1, j2) = (a1 - ncrit, a2 - ncrit);
                let tag = if ct.assignment[j1] == ct.assignment[j2] {
                    WallType::DoubleBoundaryCaustic
                } else {
                    WallType::DoubleBoundaryMaxwell
                };
                let mut ranks = ct.ranks.clone();
                ranks.swap(a1, a2);
                (
                    ComponentType::new_unchecked(ct.n, ct.l, ct.assignment.clone(), ranks),
                    tag,
                )
            }
            (crit_first, _) => {
                let (ca, va) = if crit_first { (a1, a2) } else { (a2, a1) };
                let i = ca + 1;
                let j = va - ncrit;
                let k = ct.assignment[j] as usize;
                if i == k || i == k + 1 {
                    // The critical point is an endpoint of the label's own
                    // segment: slide the boundary point across it. The value
                    // side is preserved, so the ranks stay put.
                    let other = if i == k { i - 1 } else { i };
                    let mut assignment = ct.assignment.clone();
                    assignment[j] = other as u8;
                    (
                        ComponentType::new_unchecked(ct.n, ct.l, assignment, ct.ranks.clone()),
                        WallType::BoundaryCaustic,
                    )
                } else {
                    let mut ranks = ct.ranks.clone();
                    ranks.swap(a1, a2);
                    (
                        ComponentType::new_unchecked(ct.n, ct.l, ct.assignment.clone(), ranks),
                        WallType::BoundaryMaxwell,
                    )
                }
            }
        };
        assert!(
            ranks_valid(wall.0.n, &wall.0.assignment, &wall.0.ranks),
            "wall crossing produced invalid data from {}",
            ct.canonical_id()
        );
        out.push(wall);
    }
    out
}

/// Exterior caustic contacts: the 1-based index `i` of each rank-adjacent
/// pair `(c_i, c_{i+1})`, one entry per contact.
pub fn exterior_contacts(ct: &ComponentType) -> Vec<u32> {
    let total = ct.ranks.len();
    let ncrit = (ct.n - 1) as usize;
    let mut atom_at_rank = vec![0usize; total + 1];
    for (a, &r) in ct.ranks.iter().enumerate() {
        atom_at_rank[r as usize] = a;
    }
    let mut out = Vec::new();
    for r in 1..total {
        let a1 = atom_at_rank[r];
        let a2 = atom_at_rank[r + 1];
        if a1 < ncrit && a2 < ncrit && a1.abs_diff(a2) == 1 {
            out.push(a1.min(a2) as u32 + 1);
        }
    }
    out.sort_unstable();
    out
}

/// The wall-and-chamber graph of `(n, l)`.
#[derive(Debug, Clone)]
pub struct AdjacencyGraph {
    n: u32,
    l: u32,
    nodes: Vec<ComponentType>,
    edges: Vec<(usize, usize, WallType)>,
    exterior: Vec<Vec<u32>>,
}

impl AdjacencyGraph {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Nodes in canonical order; edge endpoints index into this slice.
    pub fn nodes(&self) -> &[ComponentType] {
        &self.nodes
    }

    /// Undirected edges `(u, v, wall)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize, WallType)] {
        &self.edges
    }

    /// Exterior caustic contacts per node, parallel to `nodes`.
    pub fn exterior(&self) -> &[Vec<u32>] {
        &self.exterior
    }

    pub fn index_of(&self, ct: &ComponentType) -> Option<usize> {
        self.nodes.binary_search(ct).ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b, _)| a == v || b == v)
            .count()
    }

    pub fn is_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return true;
        }
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(u, v, _) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut queue = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push(v);
                }
            }
        }
        reached == self.nodes.len()
    }
}

/// Builds the wall-and-chamber graph by enumerating components and crossing
/// every interior wall. Symmetry of the wall relation is checked, not
/// assumed.
pub fn adjacency_graph(n: u32, l: u32) -> Result<AdjacencyGraph> {
    let nodes = enumerate_components(n, l)?;
    let mut directed: BTreeSet<(usize, usize, WallType)> = BTreeSet::new();
    let mut exterior = Vec::with_capacity(nodes.len());
    for (u, ct) in nodes.iter().enumerate() {
        for (nb, wall) in neighbors(ct) {
            let v = nodes
                .binary_search(&nb)
                .expect("wall crossing left the enumerated component set");
            assert_ne!(u, v, "a wall crossing must change the component");
            directed.insert((u, v, wall));
        }
        exterior.push(exterior_contacts(ct));
    }
    let mut edges = Vec::new();
    for &(u, v, w) in &directed {
        assert!(
            directed.contains(&(v, u, w)),
            "wall relation is not symmetric at ({u}, {v}, {})",
            w.tag()
        );
        if u < v {
            edges.push((u, v, w));
        }
    }
    Ok(AdjacencyGraph {
        n,
        l,
        nodes,
        edges,
        exterior,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::euler_numbers;

    fn count_u64(n: u32, l: u32) -> u64 {
        u64::try_from(&count_components(n, l).unwrap()).unwrap()
    }

    fn naive_u64(n: u32, l: u32) -> u64 {
        u64::try_from(&count_components_naive(n, l).unwrap()).unwrap()
    }

    #[test]
    fn counting_examples() {
        assert_eq!(naive_u64(2, 2), 8);
        assert_eq!(naive_u64(2, 0), 1);
        assert_eq!(naive_u64(4, 1), 16);
        assert_eq!(count_u64(3, 2), 36);
        assert_eq!(count_u64(5, 0), 5);
        assert_eq!(count_u64(2, 3), 48);
        assert_eq!(count_u64(1, 4), 24);
    }

    #[test]
    fn backends_agree_on_a_small_sweep() {
        for n in 1..=5u32 {
            for l in 0..=4u32 {
                if n - 1 + l > 6 {
                    continue;
                }
                let dp = count_components(n, l).unwrap();
                let naive = count_components_naive(n, l).unwrap();
                let listed = enumerate_components(n, l).unwrap();
                assert_eq!(dp, naive, "dp vs naive at ({n}, {l})");
                assert_eq!(
                    Count::from(listed.len()),
                    dp,
                    "enumeration size at ({n}, {l})"
                );
            }
        }
    }

    #[test]
    fn seed_columns_match_updown_numbers() {
        let seq = euler_numbers(8);
        for n in 1..=7u32 {
            assert_eq!(&count_components(n, 0).unwrap(), seq.get(n as usize - 1));
        }
        for n in 1..=6u32 {
            assert_eq!(&count_components(n, 1).unwrap(), seq.get(n as usize + 1));
        }
    }

    #[test]
    fn four_zero_has_two_snakes_with_middle_maximum() {
        let comps = enumerate_components(4, 0).unwrap();
        assert_eq!(comps.len(), 2);
        for ct in &comps {
            assert_eq!(ct.critical_rank(2), 3, "middle critical value on top");
        }
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let comps = enumerate_components(3, 2).unwrap();
        assert_eq!(comps.len(), 36);
        for pair in comps.windows(2) {
            assert!(pair[0] < pair[1], "canonical order violated");
        }
        for ct in &comps {
            let rebuilt = ComponentType::new(
                ct.n(),
                ct.l(),
                ct.assignment().to_vec(),
                ct.ranks().to_vec(),
            );
            assert!(rebuilt.is_ok());
        }
    }

    #[test]
    fn constructor_rejects_bad_data() {
        assert!(ComponentType::new(0, 0, vec![], vec![]).is_err());
        assert!(ComponentType::new(2, 1, vec![2], vec![1, 2]).is_err());
        assert!(ComponentType::new(2, 1, vec![0], vec![1, 1]).is_err());
        // Segment 0 of n = 2 descends, so its boundary value must exceed c_1.
        assert!(ComponentType::new(2, 1, vec![0], vec![2, 1]).is_err());
        assert!(ComponentType::new(2, 1, vec![0], vec![1, 2]).is_ok());
    }

    #[test]
    fn path_graph_for_three_one() {
        let g = adjacency_graph(3, 1).unwrap();
        assert_eq!(g.node_count(), 5);
        assert_eq!(g.edges().len(), 4);
        assert!(g.is_connected());
        let degrees: Vec<usize> = (0..5).map(|v| g.degree(v)).collect();
        assert_eq!(degrees.iter().filter(|&&d| d == 1).count(), 2);
        assert_eq!(degrees.iter().filter(|&&d| d == 2).count(), 3);
        // Walk the path from one end and read off the wall tags.
        let mut tags = Vec::new();
        let mut prev = usize::MAX;
        let mut at = degrees.iter().position(|&d| d == 1).unwrap();
        for _ in 0..4 {
            let &(u, v, w) = g
                .edges()
                .iter()
                .find(|&&(u, v, _)| (u == at && v != prev) || (v == at && u != prev))
                .unwrap();
            tags.push(w.tag());
            prev = at;
            at = if u == at { v } else { u };
        }
        assert_eq!(tags, vec!['c', 'a', 'a', 'c']);
    }

    #[test]
    fn middle_segment_component_has_two_boundary_caustic_walls() {
        let comps = enumerate_components(3, 1).unwrap();
        let middle: Vec<_> = comps.iter().filter(|c| c.segment_of(1) == 1).collect();
        assert_eq!(middle.len(), 1);
        let nb = neighbors(middle[0]);
        assert_eq!(nb.len(), 2);
        assert!(nb.iter().all(|(_, w)| *w == WallType::BoundaryCaustic));
    }

    #[test]
    fn label_pair_on_one_segment() {
        let g = adjacency_graph(1, 2).unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edges().len(), 1);
        assert_eq!(g.edges()[0].2, WallType::DoubleBoundaryCaustic);
    }

    #[test]
    fn walls_of_a_two_two_component() {
        // Both labels left of the critical point, v_1 just above c_1.
        let ct = ComponentType::new(2, 2, vec![0, 0], vec![1, 2, 3]).unwrap();
        let nb = neighbors(&ct);
        let tags: Vec<char> = nb.iter().map(|(_, w)| w.tag()).collect();
        assert_eq!(tags, vec!['a', 'd']);
        // The boundary caustic wall moves label 1 to the right segment
        // without touching the ranks.
        let a_nb = &nb[0].0;
        assert_eq!(a_nb.assignment(), &[1, 0]);
        assert_eq!(a_nb.ranks(), ct.ranks());
    }

    #[test]
    fn no_walls_for_plain_parabola() {
        let comps = enumerate_components(2, 0).unwrap();
        assert_eq!(comps.len(), 1);
        assert!(neighbors(&comps[0]).is_empty());
        assert!(exterior_contacts(&comps[0]).is_empty());
    }

    #[test]
    fn exterior_contacts_appear_with_two_critical_points() {
        let comps = enumerate_components(3, 0).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(exterior_contacts(&comps[0]), vec![1]);
        let g = adjacency_graph(4, 0).unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edges()[0].2, WallType::OrdinaryMaxwell);
        assert_eq!(g.exterior().iter().map(Vec::len).sum::<usize>(), 2);
    }

    #[test]
    fn crossing_walls_is_an_involution() {
        for ct in enumerate_components(3, 2).unwrap() {
            for (nb, w) in neighbors(&ct) {
                let back = neighbors(&nb);
                assert!(
                    back.iter().any(|(c, w2)| c == &ct && *w2 == w),
                    "wall from {} not symmetric",
                    ct.canonical_id()
                );
            }
        }
    }

    #[test]
    fn relabelling_boundary_points_permutes_components() {
        use std::collections::BTreeSet;
        let comps = enumerate_components(4, 2).unwrap();
        let set: BTreeSet<_> = comps.iter().cloned().collect();
        for ct in &comps {
            // Swap labels 1 and 2.
            let assignment = vec![ct.assignment()[1], ct.assignment()[0]];
            let n = ct.n() as usize;
            let mut ranks = ct.ranks().to_vec();
            ranks.swap(n - 1, n);
            let swapped = ComponentType::new(ct.n(), ct.l(), assignment, ranks).unwrap();
            assert!(set.contains(&swapped));
        }
    }

    #[test]
    fn guards_refuse_oversized_requests() {
        assert!(matches!(
            count_components_naive(4, 6),
            Err(Error::Guard { guard: "naive_atoms", .. })
        ));
        assert!(matches!(
            count_components_naive(8, 8),
            Err(Error::Guard { .. })
        ));
        assert!(matches!(
            count_components(8, 8),
            Err(Error::Guard { guard: "dp_atoms", .. })
        ));
        assert!(matches!(
            enumerate_components(6, 6),
            Err(Error::Guard { guard: "enumerate_atoms", .. })
        ));
        assert!(count_components(0, 1).is_err());
    }

    #[test]
    fn canonical_id_round_trip_shape() {
        let comps = enumerate_components(3, 1).unwrap();
        let ids: Vec<String> = comps.iter().map(|c| c.canonical_id()).collect();
        assert_eq!(ids[0], "0|3,1,2");
        let unique: BTreeSet<_> = ids.iter().collect();
        assert_eq!(unique.len(), ids.len());
    }
}
