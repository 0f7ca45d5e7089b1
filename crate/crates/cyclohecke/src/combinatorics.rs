//! Partitions, m-partitions, m-nodes, standard m-tableaux, contents and
//! content strings, together with the bijection between standard m-tableaux
//! and valid content strings.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::BigUint;
use num::One;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CombError {
    #[error("partition rows must be positive and weakly decreasing")]
    BadPartition,
    #[error("node ({row},{col}) at position {pos} is not valid here")]
    BadNode { row: usize, col: usize, pos: usize },
    #[error("filling is not a standard m-tableau")]
    NotStandard,
    #[error("content string violates condition (c{condition}) at entry {index}")]
    ContentString { condition: u8, index: usize },
    #[error("position index {0} out of range 1..={1}")]
    PositionRange(usize, usize),
    #[error("cannot parse m-partition `{0}`")]
    ParseMPartition(String),
}

/// A partition: weakly decreasing positive row lengths.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self, CombError> {
        if rows.iter().any(|&r| r == 0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombError::BadPartition);
        }
        Ok(Partition { rows })
    }

    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row length, 0 beyond the last row (1-based row index).
    pub fn row_len(&self, r: usize) -> usize {
        self.rows.get(r - 1).copied().unwrap_or(0)
    }

    /// All partitions of `n`, in descending lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn helper(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { rows: prefix.clone() });
                return;
            }
            for i in (1..=n.min(max)).rev() {
                prefix.push(i);
                helper(n - i, i, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        helper(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Product of all hook lengths.
    pub fn hook_product(&self) -> BigUint {
        let mut prod = BigUint::one();
        let cols = self.row_len(1);
        // Column lengths.
        let col_len: Vec<usize> = (1..=cols)
            .map(|c| self.rows.iter().filter(|&&len| len >= c).count())
            .collect();
        for (r0, &len) in self.rows.iter().enumerate() {
            for c0 in 0..len {
                let hook = (len - c0) + (col_len[c0] - (r0 + 1));
                prod *= BigUint::from(hook);
            }
        }
        prod
    }
}

/// A node of an m-partition: row, column and component position, all 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MNode {
    pub row: usize,
    pub col: usize,
    pub pos: usize,
}

impl MNode {
    pub fn new(row: usize, col: usize, pos: usize) -> Self {
        assert!(row >= 1 && col >= 1 && pos >= 1, "1-based coordinates");
        MNode { row, col, pos }
    }

    /// The symbolic content exponent: the node's content is `v_pos * q^(2z)`
    /// with `z = col - row`.
    pub fn content_z(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// An m-tuple of partitions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MPartition {
    components: Vec<Partition>,
}

impl MPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "m must be at least 1");
        MPartition { components }
    }

    pub fn empty(m: usize) -> Self {
        Self::new(vec![Partition::empty(); m])
    }

    pub fn m(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, pos: usize) -> &Partition {
        &self.components[pos - 1]
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn contains(&self, node: &MNode) -> bool {
        node.pos <= self.m() && self.component(node.pos).row_len(node.row) >= node.col
    }

    /// Nodes whose removal (resp. addition) leaves an m-partition, ordered by
    /// component, then by row.
    pub fn boundary_nodes(&self, kind: BoundaryKind) -> Vec<MNode> {
        let mut out = Vec::new();
        for (p0, comp) in self.components.iter().enumerate() {
            let pos = p0 + 1;
            match kind {
                BoundaryKind::Removable => {
                    for (r0, &len) in comp.rows.iter().enumerate() {
                        let below = comp.rows.get(r0 + 1).copied().unwrap_or(0);
                        if len > below {
                            out.push(MNode::new(r0 + 1, len, pos));
                        }
                    }
                }
                BoundaryKind::Addable => {
                    for r in 1..=comp.rows.len() + 1 {
                        let here = comp.row_len(r);
                        let above = if r == 1 { usize::MAX } else { comp.row_len(r - 1) };
                        if here < above {
                            out.push(MNode::new(r, here + 1, pos));
                        }
                    }
                }
            }
        }
        out
    }

    /// Adds an addable node.
    pub fn with_node(&self, node: &MNode) -> Result<Self, CombError> {
        let bad = || CombError::BadNode { row: node.row, col: node.col, pos: node.pos };
        if node.pos > self.m() {
            return Err(bad());
        }
        let comp = self.component(node.pos);
        if node.col != comp.row_len(node.row) + 1
            || (node.row > 1 && comp.row_len(node.row - 1) < node.col)
        {
            return Err(bad());
        }
        let mut rows = comp.rows.clone();
        if node.row > rows.len() {
            rows.push(1);
        } else {
            rows[node.row - 1] += 1;
        }
        let mut components = self.components.clone();
        components[node.pos - 1] = Partition::new(rows)?;
        Ok(MPartition { components })
    }

    /// Removes a removable node.
    pub fn without_node(&self, node: &MNode) -> Result<Self, CombError> {
        let bad = || CombError::BadNode { row: node.row, col: node.col, pos: node.pos };
        if node.pos > self.m() {
            return Err(bad());
        }
        let comp = self.component(node.pos);
        if node.col != comp.row_len(node.row)
            || comp.row_len(node.row + 1) >= node.col
            || node.col == 0
        {
            return Err(bad());
        }
        let mut rows = comp.rows.clone();
        if rows[node.row - 1] == 1 {
            rows.remove(node.row - 1);
        } else {
            rows[node.row - 1] -= 1;
        }
        let mut components = self.components.clone();
        components[node.pos - 1] = Partition::new(rows)?;
        Ok(MPartition { components })
    }

    /// Number of standard m-tableaux, by the hook formula:
    /// `n! / (product of all hook lengths over all components)`.
    pub fn dimension(&self) -> BigUint {
        let n = self.size();
        let mut num = BigUint::one();
        for k in 2..=n {
            num *= BigUint::from(k);
        }
        let mut den = BigUint::one();
        for comp in &self.components {
            den *= comp.hook_product();
        }
        debug_assert!((&num % &den) == BigUint::from(0u32), "hook formula divides n!");
        num / den
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryKind {
    Removable,
    Addable,
}

/// All m-partitions of size `n`, each exactly once, in the canonical order:
/// descending lexicographic on the component row lists, component by
/// component (so `((2),e) > ((1,1),e) > ((1),(1)) > (e,(2)) > (e,(1,1))`).
pub fn enumerate_mpartitions(m: usize, n: usize) -> Vec<MPartition> {
    assert!(m >= 1, "m must be at least 1");
    fn helper(m_left: usize, n_left: usize, prefix: &mut Vec<Partition>, out: &mut Vec<MPartition>) {
        if m_left == 0 {
            if n_left == 0 {
                out.push(MPartition::new(prefix.clone()));
            }
            return;
        }
        for size in 0..=n_left {
            for p in Partition::all(size) {
                prefix.push(p);
                helper(m_left - 1, n_left - size, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    helper(m, n, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

impl fmt::Display for MPartition {
    /// Bracket notation, e.g. `[[2,1],[],[1]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, comp) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, len) in comp.rows.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", len)?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl FromStr for MPartition {
    type Err = CombError;

    fn from_str(s: &str) -> Result<Self, CombError> {
        let err = || CombError::ParseMPartition(s.to_string());
        let t = s.trim();
        let inner = t.strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(err)?;
        let mut components = Vec::new();
        let mut depth = 0usize;
        let mut cur = String::new();
        let mut parts: Vec<String> = Vec::new();
        for ch in inner.chars() {
            match ch {
                '[' => {
                    depth += 1;
                    cur.push(ch);
                }
                ']' => {
                    depth = depth.checked_sub(1).ok_or_else(err)?;
                    cur.push(ch);
                }
                ',' if depth == 0 => {
                    parts.push(std::mem::take(&mut cur));
                }
                _ => cur.push(ch),
            }
        }
        if !cur.trim().is_empty() {
            parts.push(cur);
        }
        if parts.is_empty() {
            return Err(err());
        }
        for part in parts {
            let part = part.trim();
            let inner = part.strip_prefix('[').and_then(|p| p.strip_suffix(']')).ok_or_else(err)?;
            let rows: Vec<usize> = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|x| x.trim().parse::<usize>().map_err(|_| err()))
                    .collect::<Result<_, _>>()?
            };
            components.push(Partition::new(rows).map_err(|_| err())?);
        }
        Ok(MPartition::new(components))
    }
}

/// A standard m-tableau: a filling of an m-partition of size `n` by
/// `1, ..., n`, strictly increasing along the rows and columns of every
/// component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardMTableau {
    shape: MPartition,
    /// `places[i]` is the node carrying entry `i + 1`.
    places: Vec<MNode>,
}

impl StandardMTableau {
    pub fn new(shape: MPartition, places: Vec<MNode>) -> Result<Self, CombError> {
        let t = StandardMTableau { shape, places };
        if t.is_standard() {
            Ok(t)
        } else {
            Err(CombError::NotStandard)
        }
    }

    fn is_standard(&self) -> bool {
        if self.places.len() != self.shape.size() {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        for node in &self.places {
            if !self.shape.contains(node) || !seen.insert(*node) {
                return false;
            }
        }
        // Row/column monotonicity: the left and upper neighbors carry
        // smaller entries.
        for (i0, node) in self.places.iter().enumerate() {
            for nb in [
                (node.row, node.col.wrapping_sub(1)),
                (node.row.wrapping_sub(1), node.col),
            ] {
                if nb.0 >= 1 && nb.1 >= 1 {
                    let nb = MNode::new(nb.0, nb.1, node.pos);
                    match self.entry_at(&nb) {
                        Some(e) if e < i0 + 1 => {}
                        _ => return false,
                    }
                }
            }
        }
        true
    }

    pub fn shape(&self) -> &MPartition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.places.len()
    }

    pub fn m(&self) -> usize {
        self.shape.m()
    }

    /// Node carrying entry `i` (1-based).
    pub fn node_of(&self, i: usize) -> &MNode {
        &self.places[i - 1]
    }

    /// Entry at a node, if occupied.
    pub fn entry_at(&self, node: &MNode) -> Option<usize> {
        self.places.iter().position(|p| p == node).map(|i| i + 1)
    }

    /// Symbolic content of the node carrying `i`: the pair `(pos, z)` with
    /// content `v_pos * q^(2z)`.
    pub fn content_pair(&self, i: usize) -> (usize, i64) {
        let node = self.node_of(i);
        (node.pos, node.content_z())
    }

    /// Canonical sort key: the coordinate sequence `(pos, row, col)` of the
    /// entries `1, ..., n`.
    fn sort_key(&self) -> Vec<(usize, usize, usize)> {
        self.places.iter().map(|p| (p.pos, p.row, p.col)).collect()
    }

    /// The sub-tableau on entries `1, ..., k`.
    pub fn restricted(&self, k: usize) -> StandardMTableau {
        let places: Vec<MNode> = self.places[..k].to_vec();
        let mut shape = MPartition::empty(self.m());
        for node in &places {
            shape = shape.with_node(node).expect("prefix of a standard tableau");
        }
        StandardMTableau { shape, places }
    }

    /// Swaps the entries `i` and `i + 1`; `None` when the swap breaks
    /// standardness (the convention `X^{s_i} = 0`).
    pub fn apply_adjacent_transposition(&self, i: usize) -> Option<StandardMTableau> {
        assert!((1..self.n()).contains(&i), "need 1 <= i <= n-1");
        let mut places = self.places.clone();
        places.swap(i - 1, i);
        let t = StandardMTableau { shape: self.shape.clone(), places };
        if t.is_standard() {
            Some(t)
        } else {
            None
        }
    }

    /// Grid view: `grids[pos-1][row-1][col-1]` is the entry at that node.
    pub fn to_grids(&self) -> Vec<Vec<Vec<usize>>> {
        let mut grids: Vec<Vec<Vec<usize>>> = self
            .shape
            .components()
            .iter()
            .map(|comp| comp.rows().iter().map(|&len| vec![0; len]).collect())
            .collect();
        for (i0, node) in self.places.iter().enumerate() {
            grids[node.pos - 1][node.row - 1][node.col - 1] = i0 + 1;
        }
        grids
    }

    pub fn from_grids(grids: &[Vec<Vec<usize>>]) -> Result<StandardMTableau, CombError> {
        let mut components = Vec::new();
        for grid in grids {
            let rows: Vec<usize> = grid.iter().map(Vec::len).collect();
            components.push(Partition::new(rows)?);
        }
        let shape = MPartition::new(components);
        let n = shape.size();
        let mut places = vec![None; n];
        for (p0, grid) in grids.iter().enumerate() {
            for (r0, row) in grid.iter().enumerate() {
                for (c0, &e) in row.iter().enumerate() {
                    if e < 1 || e > n || places[e - 1].is_some() {
                        return Err(CombError::NotStandard);
                    }
                    places[e - 1] = Some(MNode::new(r0 + 1, c0 + 1, p0 + 1));
                }
            }
        }
        let places: Vec<MNode> = places.into_iter().map(|p| p.expect("all entries seen")).collect();
        StandardMTableau::new(shape, places)
    }
}

impl PartialOrd for StandardMTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for StandardMTableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for StandardMTableau {
    /// Grid notation, e.g. `[[[1,2],[3]],[[4]]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let grids = self.to_grids();
        write!(f, "[")?;
        for (i, grid) in grids.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, row) in grid.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(
                    f,
                    "[{}]",
                    row.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
                )?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl FromStr for StandardMTableau {
    type Err = CombError;

    /// Parses the grid notation produced by `Display`, e.g.
    /// `[[[1,2],[3]],[[4]]]`.
    fn from_str(s: &str) -> Result<Self, CombError> {
        let err = || CombError::ParseMPartition(s.to_string());
        // Split one bracket level into comma-separated parts.
        fn split_level(inner: &str, bad: &impl Fn() -> CombError) -> Result<Vec<String>, CombError> {
            let mut depth = 0usize;
            let mut cur = String::new();
            let mut parts = Vec::new();
            for ch in inner.chars() {
                match ch {
                    '[' => {
                        depth += 1;
                        cur.push(ch);
                    }
                    ']' => {
                        depth = depth.checked_sub(1).ok_or_else(bad)?;
                        cur.push(ch);
                    }
                    ',' if depth == 0 => parts.push(std::mem::take(&mut cur)),
                    _ => cur.push(ch),
                }
            }
            if !cur.trim().is_empty() {
                parts.push(cur);
            }
            Ok(parts)
        }
        let strip = |t: &str| -> Result<String, CombError> {
            t.trim()
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .map(str::to_string)
                .ok_or_else(err)
        };
        let mut grids = Vec::new();
        for grid_s in split_level(&strip(s)?, &err)? {
            let mut grid = Vec::new();
            for row_s in split_level(&strip(&grid_s)?, &err)? {
                let inner = strip(&row_s)?;
                let row: Vec<usize> = if inner.trim().is_empty() {
                    Vec::new()
                } else {
                    inner
                        .split(',')
                        .map(|x| x.trim().parse::<usize>().map_err(|_| err()))
                        .collect::<Result<_, _>>()?
                };
                grid.push(row);
            }
            grids.push(grid);
        }
        if grids.is_empty() {
            return Err(err());
        }
        StandardMTableau::from_grids(&grids)
    }
}

/// All standard m-tableaux of shape `lambda`, in the canonical order.
pub fn enumerate_standard_tableaux(shape: &MPartition) -> Vec<StandardMTableau> {
    fn helper(shape: &MPartition, out: &mut Vec<Vec<MNode>>) {
        if shape.size() == 0 {
            out.push(Vec::new());
            return;
        }
        for node in shape.boundary_nodes(BoundaryKind::Removable) {
            let smaller = shape.without_node(&node).expect("removable");
            let start = out.len();
            helper(&smaller, out);
            for places in &mut out[start..] {
                places.push(node);
            }
        }
    }
    let mut fillings = Vec::new();
    helper(shape, &mut fillings);
    let mut out: Vec<StandardMTableau> = fillings
        .into_iter()
        .map(|places| StandardMTableau { shape: shape.clone(), places })
        .collect();
    out.sort();
    out
}

/// A sequence of symbolic contents `v_k * q^(2z)`, stored as pairs `(k, z)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContentString {
    entries: Vec<(usize, i64)>,
}

impl ContentString {
    pub fn new(entries: Vec<(usize, i64)>) -> Self {
        ContentString { entries }
    }

    pub fn entries(&self) -> &[(usize, i64)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// The content string of a standard m-tableau: entry `i` is the content of
/// the node carrying `i`.
pub fn content_string(t: &StandardMTableau) -> ContentString {
    ContentString::new((1..=t.n()).map(|i| t.content_pair(i)).collect())
}

/// Checks the defining conditions of a content string:
/// (c1) the first entry is some plain `v_k`;
/// (c2) a later entry `v_k q^(2z)` with `z != 0` needs an earlier neighbor
///      `v_k q^(2(z-1))` or `v_k q^(2(z+1))`;
/// (c3) between two equal entries both neighbors `v_k q^(2(z-1))` and
///      `v_k q^(2(z+1))` must occur.
pub fn is_content_string(s: &ContentString, m: usize) -> Result<(), CombError> {
    let e = &s.entries;
    for (idx, &(k, _)) in e.iter().enumerate() {
        if k == 0 || k > m {
            return Err(CombError::PositionRange(if k == 0 { 0 } else { k }, m));
        }
        let _ = idx;
    }
    if let Some(&(_, z)) = e.first() {
        if z != 0 {
            return Err(CombError::ContentString { condition: 1, index: 0 });
        }
    }
    for j in 1..e.len() {
        let (k, z) = e[j];
        if z != 0 {
            let ok = e[..j].iter().any(|&(k2, z2)| k2 == k && (z2 == z - 1 || z2 == z + 1));
            if !ok {
                return Err(CombError::ContentString { condition: 2, index: j });
            }
        }
    }
    for j in 1..e.len() {
        for i in 0..j {
            if e[i] == e[j] {
                let (k, z) = e[j];
                let between = &e[i + 1..j];
                let lower = between.iter().any(|&x| x == (k, z - 1));
                let upper = between.iter().any(|&x| x == (k, z + 1));
                if !(lower && upper) {
                    return Err(CombError::ContentString { condition: 3, index: j });
                }
            }
        }
    }
    Ok(())
}

/// Inverse of [`content_string`]: places entry `i` at the first non-occupied
/// place of the diagonal with content `s_i` in component `k`.
pub fn string_to_tableau(s: &ContentString, m: usize) -> Result<StandardMTableau, CombError> {
    is_content_string(s, m)?;
    let mut shape = MPartition::empty(m);
    let mut places = Vec::with_capacity(s.len());
    let mut occupied = std::collections::HashSet::new();
    for &(k, z) in &s.entries {
        let mut r = if z < 0 { (1 - z) as usize } else { 1 };
        loop {
            let node = MNode::new(r, (r as i64 + z) as usize, k);
            if !occupied.contains(&node) {
                shape = shape
                    .with_node(&node)
                    .map_err(|_| CombError::NotStandard)?;
                occupied.insert(node);
                places.push(node);
                break;
            }
            r += 1;
        }
    }
    StandardMTableau::new(shape, places)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> MPartition {
        s.parse().expect("m-partition literal")
    }

    #[test]
    fn enumerate_mpartitions_canonical_order() {
        let got: Vec<String> = enumerate_mpartitions(2, 2).iter().map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["[[2],[]]", "[[1,1],[]]", "[[1],[1]]", "[[],[2]]", "[[],[1,1]]"]);
        assert_eq!(enumerate_mpartitions(1, 0), vec![MPartition::empty(1)]);
        assert_eq!(enumerate_mpartitions(3, 3).len(), 22);
    }

    #[test]
    fn boundary_nodes_examples() {
        let l = mp("[[2],[1]]");
        assert_eq!(
            l.boundary_nodes(BoundaryKind::Removable),
            vec![MNode::new(1, 2, 1), MNode::new(1, 1, 2)]
        );
        assert_eq!(
            l.boundary_nodes(BoundaryKind::Addable),
            vec![
                MNode::new(1, 3, 1),
                MNode::new(2, 1, 1),
                MNode::new(1, 2, 2),
                MNode::new(2, 1, 2)
            ]
        );
        let e = MPartition::empty(3);
        assert!(e.boundary_nodes(BoundaryKind::Removable).is_empty());
        assert_eq!(
            e.boundary_nodes(BoundaryKind::Addable),
            vec![MNode::new(1, 1, 1), MNode::new(1, 1, 2), MNode::new(1, 1, 3)]
        );
        let two_one = mp("[[2,1]]");
        assert_eq!(
            two_one.boundary_nodes(BoundaryKind::Removable),
            vec![MNode::new(1, 2, 1), MNode::new(2, 1, 1)]
        );
    }

    #[test]
    fn content_exponents() {
        assert_eq!(MNode::new(1, 1, 1).content_z(), 0);
        assert_eq!(MNode::new(3, 1, 1).content_z(), -2);
        assert_eq!(MNode::new(1, 3, 2).content_z(), 2);
    }

    #[test]
    fn tableau_enumeration_counts_and_order() {
        assert_eq!(enumerate_standard_tableaux(&mp("[[1],[1]]")).len(), 2);
        assert_eq!(enumerate_standard_tableaux(&mp("[[2,1]]")).len(), 2);
        assert_eq!(enumerate_standard_tableaux(&mp("[[1,1],[2]]")).len(), 6);
        // Canonical order for ((1),(1)): entry 1 in component 1 comes first.
        let ts = enumerate_standard_tableaux(&mp("[[1],[1]]"));
        assert_eq!(ts[0].to_string(), "[[[1]],[[2]]]");
        assert_eq!(ts[1].to_string(), "[[[2]],[[1]]]");
        // Canonical order for (2,1): row tableau [[1,2],[3]] precedes [[1,3],[2]].
        let ts = enumerate_standard_tableaux(&mp("[[2,1]]"));
        assert_eq!(ts[0].to_string(), "[[[1,2],[3]]]");
        assert_eq!(ts[1].to_string(), "[[[1,3],[2]]]");
    }

    #[test]
    fn dimensions_match_enumeration() {
        for m in 1..=3 {
            for n in 0..=5 {
                for l in enumerate_mpartitions(m, n) {
                    assert_eq!(
                        l.dimension(),
                        BigUint::from(enumerate_standard_tableaux(&l).len()),
                        "shape {}",
                        l
                    );
                }
            }
        }
        assert_eq!(mp("[[1,1],[2]]").dimension(), BigUint::from(6u32));
        assert_eq!(MPartition::empty(4).dimension(), BigUint::from(1u32));
        assert_eq!(mp("[[2,1,1]]").dimension(), BigUint::from(3u32));
    }

    #[test]
    fn content_string_round_trip() {
        for m in 1..=3 {
            for n in 0..=5 {
                for l in enumerate_mpartitions(m, n) {
                    for t in enumerate_standard_tableaux(&l) {
                        let s = content_string(&t);
                        assert!(is_content_string(&s, m).is_ok());
                        assert_eq!(string_to_tableau(&s, m).unwrap(), t);
                    }
                }
            }
        }
    }

    #[test]
    fn content_string_violations() {
        // First entry must be some v_k.
        let s = ContentString::new(vec![(1, 1)]);
        assert_eq!(
            is_content_string(&s, 1),
            Err(CombError::ContentString { condition: 1, index: 0 })
        );
        // Repeat with no neighbors in between.
        let s = ContentString::new(vec![(1, 0), (1, 0)]);
        assert_eq!(
            is_content_string(&s, 1),
            Err(CombError::ContentString { condition: 3, index: 1 })
        );
        // A jump needs an earlier neighbor.
        let s = ContentString::new(vec![(1, 0), (1, 2)]);
        assert_eq!(
            is_content_string(&s, 1),
            Err(CombError::ContentString { condition: 2, index: 1 })
        );
    }

    #[test]
    fn string_to_tableau_examples() {
        let t = string_to_tableau(&ContentString::new(vec![(2, 0)]), 2).unwrap();
        assert_eq!(t.to_string(), "[[],[[1]]]");
        let t = string_to_tableau(&ContentString::new(vec![(1, 0), (1, -1), (1, 1)]), 1).unwrap();
        assert_eq!(t.to_string(), "[[[1,3],[2]]]");
    }

    #[test]
    fn ten_node_worked_example() {
        // The 2-tableau with content string
        // (v1, v1 q^2, v2, v1 q^4, v2 q^-2, v1 q^-2, v1 q^-4, v2 q^2, v1, v2 q^4).
        let s = ContentString::new(vec![
            (1, 0),
            (1, 1),
            (2, 0),
            (1, 2),
            (2, -1),
            (1, -1),
            (1, -2),
            (2, 1),
            (1, 0),
            (2, 2),
        ]);
        assert!(is_content_string(&s, 2).is_ok());
        let t = string_to_tableau(&s, 2).unwrap();
        assert_eq!(t.shape().to_string(), "[[3,2,1],[3,1]]");
        assert_eq!(content_string(&t), s);
        // Spot checks from the layout: 7 sits at (3,1) in component 1 and
        // 10 at (1,3) in component 2.
        assert_eq!(t.node_of(7), &MNode::new(3, 1, 1));
        assert_eq!(t.node_of(10), &MNode::new(1, 3, 2));
    }

    #[test]
    fn adjacent_transpositions() {
        let row = StandardMTableau::from_grids(&[vec![vec![1, 2]]]).unwrap();
        assert!(row.apply_adjacent_transposition(1).is_none());
        let ts = enumerate_standard_tableaux(&mp("[[1],[1]]"));
        let swapped = ts[0].apply_adjacent_transposition(1).unwrap();
        assert_eq!(swapped, ts[1]);
        assert_eq!(swapped.apply_adjacent_transposition(1).unwrap(), ts[0]);
    }

    #[test]
    fn spectrum_simplicity_small() {
        // Distinct standard m-tableaux have distinct content strings.
        for m in 1..=2 {
            for n in 0..=4 {
                let mut seen = std::collections::HashSet::new();
                for l in enumerate_mpartitions(m, n) {
                    for t in enumerate_standard_tableaux(&l) {
                        assert!(seen.insert(content_string(&t)));
                    }
                }
            }
        }
    }

    #[test]
    fn bijection_with_content_strings() {
        // Every valid content string of length n arises from a tableau
        // (exhaustive over all (k, z) sequences with small ranges).
        let m = 2;
        let n = 3;
        let mut valid = std::collections::HashSet::new();
        let alphabet: Vec<(usize, i64)> =
            (1..=m).flat_map(|k| (-2..=2).map(move |z| (k, z))).collect();
        let mut stack = vec![Vec::new()];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == n {
                let s = ContentString::new(prefix);
                if is_content_string(&s, m).is_ok() {
                    valid.insert(s);
                }
                continue;
            }
            for &a in &alphabet {
                let mut next = prefix.clone();
                next.push(a);
                stack.push(next);
            }
        }
        let mut from_tableaux = std::collections::HashSet::new();
        for l in enumerate_mpartitions(m, n) {
            for t in enumerate_standard_tableaux(&l) {
                from_tableaux.insert(content_string(&t));
            }
        }
        assert_eq!(valid, from_tableaux);
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["[[2,1],[],[1]]", "[[],[]]", "[[3,2,1],[3,1]]"] {
            assert_eq!(mp(s).to_string(), s);
        }
        assert!("[[1,2]]".parse::<MPartition>().is_err());
        assert!("nonsense".parse::<MPartition>().is_err());
    }

    #[test]
    fn grids_round_trip() {
        let t = StandardMTableau::from_grids(&[vec![vec![1, 2], vec![3]], vec![vec![4]]]).unwrap();
        assert_eq!(t.to_string(), "[[[1,2],[3]],[[4]]]");
        assert_eq!(StandardMTableau::from_grids(&t.to_grids()).unwrap(), t);
        assert!(StandardMTableau::from_grids(&[vec![vec![2, 1]]]).is_err());
    }

    #[test]
    fn tableau_parse_round_trip() {
        for m in 1..=2 {
            for n in 0..=4 {
                for l in enumerate_mpartitions(m, n) {
                    for t in enumerate_standard_tableaux(&l) {
                        assert_eq!(t.to_string().parse::<StandardMTableau>().unwrap(), t);
                    }
                }
            }
        }
        assert!("[[[2,1]]]".parse::<StandardMTableau>().is_err());
        assert!("[[1,2]".parse::<StandardMTableau>().is_err());
        assert!("".parse::<StandardMTableau>().is_err());
    }

    #[test]
    fn restriction_prefix() {
        let t = StandardMTableau::from_grids(&[vec![vec![1, 2], vec![3]], vec![vec![4]]]).unwrap();
        let r = t.restricted(3);
        assert_eq!(r.to_string(), "[[[1,2],[3]],[]]");
    }

    #[test]
    fn containment_bound() {
        // Entry i always has |z| <= i - 1.
        for m in 1..=2 {
            for n in 0..=4 {
                for l in enumerate_mpartitions(m, n) {
                    for t in enumerate_standard_tableaux(&l) {
                        for (i0, &(_, z)) in content_string(&t).entries().iter().enumerate() {
                            assert!(z.unsigned_abs() as usize <= i0);
                        }
                    }
                }
            }
        }
    }
}
