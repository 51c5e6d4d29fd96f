//! Brauer trees as plain data: shape predicates, winding around the
//! exceptional vertex, the similarity test, and real-stem extraction.
//!
//! Trees enter the system only as fixtures or as shapes implied by rules;
//! nothing here computes a tree from character data.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("edge set is not a tree: {0}")]
    NotATree(String),
    #[error("duplicate edge label `{0}`")]
    DuplicateEdgeLabel(String),
    #[error("vertex index {0} out of range")]
    BadVertexIndex(usize),
    #[error("no exceptional vertex designated")]
    MissingExceptional,
    #[error("multiplicity must be >= 1")]
    BadMultiplicity,
    #[error("fixture needs an odd q, got {0}")]
    EvenQ(u64),
    #[error("winding factor must be >= 1")]
    BadWindingFactor,
    #[error("malformed tree text: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub label: String,
    pub real: bool,
    /// Optional character-degree annotation, carried as a decimal string to
    /// keep the serialized form integer-exact.
    pub degree: Option<String>,
}

/// A Brauer tree: labelled vertices, labelled edges, and at most one
/// designated exceptional vertex with multiplicity m >= 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerTree {
    pub vertices: Vec<Vertex>,
    /// Unordered pairs of vertex indices plus an edge label; labels are
    /// pairwise distinct (they stand for distinct Brauer characters).
    pub edges: Vec<(usize, usize, String)>,
    pub exceptional: Option<(usize, u64)>,
}

impl BrauerTree {
    pub fn validate(&self) -> Result<(), TreeError> {
        let n = self.vertices.len();
        if self.edges.len() + 1 != n {
            return Err(TreeError::NotATree(format!(
                "{} vertices but {} edges",
                n,
                self.edges.len()
            )));
        }
        let mut labels: Vec<&str> = self.edges.iter().map(|(_, _, l)| l.as_str()).collect();
        labels.sort_unstable();
        for w in labels.windows(2) {
            if w[0] == w[1] {
                return Err(TreeError::DuplicateEdgeLabel(w[0].to_string()));
            }
        }
        for &(a, b, _) in &self.edges {
            if a >= n || b >= n {
                return Err(TreeError::BadVertexIndex(a.max(b)));
            }
        }
        // Connectivity by BFS; with |E| = |V| - 1 this implies acyclicity.
        if n > 0 {
            let adj = self.adjacency();
            let mut seen = vec![false; n];
            let mut queue = VecDeque::from([0usize]);
            seen[0] = true;
            let mut count = 1;
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        count += 1;
                        queue.push_back(w);
                    }
                }
            }
            if count != n {
                return Err(TreeError::NotATree("disconnected".into()));
            }
        }
        if let Some((idx, m)) = self.exceptional {
            if idx >= n {
                return Err(TreeError::BadVertexIndex(idx));
            }
            if m < 1 {
                return Err(TreeError::BadMultiplicity);
            }
        }
        Ok(())
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (i, &(a, b, _)) in self.edges.iter().enumerate() {
            adj[a].push((b, i));
            adj[b].push((a, i));
        }
        adj
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Longest path length, by BFS eccentricities from every vertex.
    pub fn diameter(&self) -> usize {
        let n = self.vertices.len();
        if n == 0 {
            return 0;
        }
        let adj = self.adjacency();
        let mut best = 0;
        for start in 0..n {
            let mut dist = vec![usize::MAX; n];
            dist[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            best = best.max(dist.iter().filter(|&&d| d != usize::MAX).copied().max().unwrap_or(0));
        }
        best
    }

    /// A star is a tree of diameter at most 2.
    pub fn is_star(&self) -> bool {
        self.diameter() <= 2
    }

    /// Independent star check: at most one edge, or some vertex meets every
    /// edge. Used by the tests to cross-validate `is_star`.
    pub fn is_star_by_center(&self) -> bool {
        if self.edges.len() <= 1 {
            return true;
        }
        (0..self.vertices.len())
            .any(|v| self.edges.iter().all(|&(a, b, _)| a == v || b == v))
    }

    /// A line is a tree in which every vertex has at most two neighbours.
    pub fn is_line(&self) -> bool {
        let adj = self.adjacency();
        adj.iter().all(|nb| nb.len() <= 2)
    }

    /// Glues `n` relabelled copies of the tree at its exceptional vertex.
    pub fn wind(&self, n: u64) -> Result<BrauerTree, TreeError> {
        if n < 1 {
            return Err(TreeError::BadWindingFactor);
        }
        self.validate()?;
        let (q_idx, mult) = self.exceptional.ok_or(TreeError::MissingExceptional)?;
        let mut vertices = vec![self.vertices[q_idx].clone()];
        let mut edges = Vec::new();
        // copy k maps old vertex v (v != Q) to its slot in `vertices`
        for k in 1..=n {
            let mut map = vec![usize::MAX; self.vertices.len()];
            map[q_idx] = 0;
            for (v, vert) in self.vertices.iter().enumerate() {
                if v == q_idx {
                    continue;
                }
                map[v] = vertices.len();
                let mut copy = vert.clone();
                copy.label = format!("{}#{k}", copy.label);
                copy.degree = None;
                vertices.push(copy);
            }
            for (a, b, label) in &self.edges {
                edges.push((map[*a], map[*b], format!("{label}#{k}")));
            }
        }
        let out = BrauerTree { vertices, edges, exceptional: Some((0, mult)) };
        debug_assert!(out.validate().is_ok());
        Ok(out)
    }

    /// AHU-style canonical encoding of the branch entered via `root`,
    /// with `parent` excluded.
    fn branch_encoding(&self, adj: &[Vec<(usize, usize)>], root: usize, parent: usize) -> String {
        let mut children: Vec<String> = adj[root]
            .iter()
            .filter(|&&(w, _)| w != parent)
            .map(|&(w, _)| self.branch_encoding(adj, w, root))
            .collect();
        children.sort();
        format!("({})", children.concat())
    }

    /// The multiset of branch encodings at the exceptional vertex, as
    /// sorted (encoding, count) pairs.
    fn branch_classes(&self) -> Result<Vec<(String, u64)>, TreeError> {
        let (q_idx, _) = self.exceptional.ok_or(TreeError::MissingExceptional)?;
        let adj = self.adjacency();
        let mut encodings: Vec<String> = adj[q_idx]
            .iter()
            .map(|&(w, _)| self.branch_encoding(&adj, w, q_idx))
            .collect();
        encodings.sort();
        let mut classes: Vec<(String, u64)> = Vec::new();
        for e in encodings {
            match classes.last_mut() {
                Some((prev, c)) if *prev == e => *c += 1,
                _ => classes.push((e, 1)),
            }
        }
        Ok(classes)
    }

    /// Canonical signature of the primitive root: branch classes with
    /// counts divided by their gcd. Two trees are similar exactly when
    /// these signatures agree.
    fn primitive_signature(&self) -> Result<Vec<(String, u64)>, TreeError> {
        let classes = self.branch_classes()?;
        let g = classes.iter().fold(0u64, |acc, (_, c)| gcd(acc, *c));
        Ok(classes
            .into_iter()
            .map(|(e, c)| (e, if g == 0 { c } else { c / g }))
            .collect())
    }

    /// True when both trees are windings of one common rooted tree around
    /// their exceptional vertices.
    pub fn similar(&self, other: &BrauerTree) -> Result<bool, TreeError> {
        Ok(self.primitive_signature()? == other.primitive_signature()?)
    }

    /// Rooted-isomorphism test relative to the exceptional vertices.
    pub fn rooted_isomorphic(&self, other: &BrauerTree) -> Result<bool, TreeError> {
        Ok(self.branch_classes()? == other.branch_classes()?)
    }

    /// Induced subgraph on the real vertices. The result reports whether
    /// the fragment is a path; a non-path fragment is flagged as a data
    /// integrity violation rather than an error.
    pub fn real_stem(&self) -> RealStem {
        let keep: Vec<usize> =
            (0..self.vertices.len()).filter(|&v| self.vertices[v].real).collect();
        let mut index = vec![usize::MAX; self.vertices.len()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let edges: Vec<(usize, usize, String)> = self
            .edges
            .iter()
            .filter(|&&(a, b, _)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|(a, b, l)| (index[*a], index[*b], l.clone()))
            .collect();
        let n = keep.len();
        // Path test: connected, |E| = |V| - 1, all degrees <= 2.
        let mut degs = vec![0usize; n];
        for &(a, b, _) in &edges {
            degs[a] += 1;
            degs[b] += 1;
        }
        let mut is_path = n == 0 || edges.len() + 1 == n;
        if is_path && n > 0 {
            is_path &= degs.iter().all(|&d| d <= 2);
            let mut adj = vec![Vec::new(); n];
            for &(a, b, _) in &edges {
                adj[a].push(b);
                adj[b].push(a);
            }
            let mut seen = vec![false; n];
            let mut queue = VecDeque::from([0usize]);
            seen[0] = true;
            let mut count = 1;
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        count += 1;
                        queue.push_back(w);
                    }
                }
            }
            is_path &= count == n;
        }
        let violation = if is_path {
            None
        } else {
            Some("real vertices do not induce a single path".to_string())
        };
        RealStem {
            vertex_indices: keep,
            edges,
            is_path,
            violation,
        }
    }

    /// Plain text serialization; `parse_text` reads the same form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "tree vertices={} edges={}\n",
            self.vertices.len(),
            self.edges.len()
        ));
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!(
                "vertex {i} real={} degree={} label={}\n",
                v.real,
                v.degree.as_deref().unwrap_or("-"),
                v.label
            ));
        }
        for (a, b, l) in &self.edges {
            out.push_str(&format!("edge {a} {b} label={l}\n"));
        }
        match self.exceptional {
            Some((idx, m)) => out.push_str(&format!("exceptional index={idx} multiplicity={m}\n")),
            None => out.push_str("exceptional none\n"),
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<BrauerTree, TreeError> {
        let bad = |m: &str| TreeError::Parse(m.to_string());
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| bad("empty input"))?;
        if !header.starts_with("tree ") {
            return Err(bad("missing header"));
        }
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let mut exceptional = None;
        for line in lines {
            let line = line.trim();
            if let Some(rest) = line.strip_prefix("vertex ") {
                let (head, label) =
                    rest.split_once(" label=").ok_or_else(|| bad("vertex without label"))?;
                let mut parts = head.split_whitespace();
                let _idx: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| bad("bad vertex index"))?;
                let mut real = false;
                let mut degree = None;
                for p in parts {
                    if let Some(v) = p.strip_prefix("real=") {
                        real = v == "true";
                    } else if let Some(v) = p.strip_prefix("degree=") {
                        degree = if v == "-" { None } else { Some(v.to_string()) };
                    }
                }
                vertices.push(Vertex { label: label.to_string(), real, degree });
            } else if let Some(rest) = line.strip_prefix("edge ") {
                let (head, label) =
                    rest.split_once(" label=").ok_or_else(|| bad("edge without label"))?;
                let mut parts = head.split_whitespace();
                let a: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| bad("bad edge endpoint"))?;
                let b: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| bad("bad edge endpoint"))?;
                edges.push((a, b, label.to_string()));
            } else if let Some(rest) = line.strip_prefix("exceptional") {
                let rest = rest.trim();
                if rest != "none" {
                    let mut idx = None;
                    let mut mult = None;
                    for p in rest.split_whitespace() {
                        if let Some(v) = p.strip_prefix("index=") {
                            idx = v.parse().ok();
                        } else if let Some(v) = p.strip_prefix("multiplicity=") {
                            mult = v.parse().ok();
                        }
                    }
                    exceptional = Some((
                        idx.ok_or_else(|| bad("bad exceptional index"))?,
                        mult.ok_or_else(|| bad("bad multiplicity"))?,
                    ));
                }
            } else {
                return Err(bad(line));
            }
        }
        let tree = BrauerTree { vertices, edges, exceptional };
        tree.validate()?;
        Ok(tree)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealStem {
    /// Indices into the original vertex list, in original order.
    pub vertex_indices: Vec<usize>,
    /// Edges re-indexed against `vertex_indices`.
    pub edges: Vec<(usize, usize, String)>,
    pub is_path: bool,
    pub violation: Option<String>,
}

/// Symbolic character degrees of the rank-3 odd orthogonal fixture, left to
/// right. The fourth vertex is the exceptional one.
pub const SO7_DEGREE_FORMS: [&str; 5] = [
    "1",
    "q^2(q^4+q^2+1)",
    "q^4(q^3+1)(q+1)/2",
    "(q^6-1)(q^2-1)",
    "q^4(q^3-1)(q-1)/2",
];

/// The explicit five-vertex line observed for SO_7(q) at primes dividing
/// q^2 + 1: a path whose exceptional vertex sits second from the right
/// (index 3 from the left), with the printed character degrees evaluated at
/// the supplied odd q.
pub fn so7_fixture(q: Option<u64>) -> Result<BrauerTree, TreeError> {
    let degrees: Vec<Option<String>> = match q {
        None => vec![None; 5],
        Some(q) => {
            if q % 2 == 0 {
                return Err(TreeError::EvenQ(q));
            }
            let qb = BigUint::from(q);
            let d0 = BigUint::from(1u32);
            let d1 = qb.pow(2) * (qb.pow(4) + qb.pow(2) + 1u32);
            let d2 = qb.pow(4) * (qb.pow(3) + 1u32) * (&qb + 1u32) / 2u32;
            let d3 = (qb.pow(6) - 1u32) * (qb.pow(2) - 1u32);
            let d4 = qb.pow(4) * (qb.pow(3) - 1u32) * (&qb - 1u32) / 2u32;
            vec![d0, d1, d2, d3, d4].into_iter().map(|d| Some(d.to_string())).collect()
        }
    };
    let vertices: Vec<Vertex> = SO7_DEGREE_FORMS
        .iter()
        .zip(degrees)
        .map(|(form, degree)| Vertex { label: form.to_string(), real: true, degree })
        .collect();
    let edges = (0..4).map(|i| (i, i + 1, format!("e{i}"))).collect();
    let tree = BrauerTree { vertices, edges, exceptional: Some((3, 1)) };
    tree.validate().expect("fixture is a valid tree");
    Ok(tree)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn star(edges: usize) -> BrauerTree {
        let mut vertices = vec![Vertex { label: "Q".into(), real: true, degree: None }];
        let mut es = Vec::new();
        for i in 0..edges {
            vertices.push(Vertex { label: format!("v{i}"), real: true, degree: None });
            es.push((0, i + 1, format!("e{i}")));
        }
        BrauerTree { vertices, edges: es, exceptional: Some((0, 1)) }
    }

    pub fn path(edges: usize, exceptional_at: usize) -> BrauerTree {
        let vertices = (0..=edges)
            .map(|i| Vertex { label: format!("v{i}"), real: true, degree: None })
            .collect();
        let es = (0..edges).map(|i| (i, i + 1, format!("e{i}"))).collect();
        BrauerTree { vertices, edges: es, exceptional: Some((exceptional_at, 1)) }
    }

    #[test]
    fn shape_predicates() {
        let single = star(0);
        assert_eq!(single.diameter(), 0);
        assert!(single.is_star());

        let p4 = path(4, 0);
        assert_eq!(p4.diameter(), 4);
        assert!(!p4.is_star());
        assert!(p4.is_line());

        let s4 = star(4);
        assert_eq!(s4.diameter(), 2);
        assert!(s4.is_star());
        assert!(!s4.is_line());
    }

    #[test]
    fn wind_forced_cases() {
        let single_edge = path(1, 0);
        let wound = single_edge.wind(4).unwrap();
        assert_eq!(wound.edge_count(), 4);
        assert!(wound.is_star());

        let t = path(2, 0);
        let same = t.wind(1).unwrap();
        assert!(same.rooted_isomorphic(&t).unwrap());

        let two = t.wind(2).unwrap();
        assert_eq!(two.edge_count(), 4);
        assert_eq!(two.diameter(), 4);
    }

    #[test]
    fn wind_missing_exceptional_rejected() {
        let mut t = path(2, 0);
        t.exceptional = None;
        assert_eq!(t.wind(2), Err(TreeError::MissingExceptional));
    }

    #[test]
    fn similarity_examples() {
        // Stars with 2 and 6 edges both wind a single edge.
        assert!(star(2).similar(&star(6)).unwrap());
        // The 4-path around its midpoint is the 2-path doubled.
        let p4_mid = path(4, 2);
        let p2_end = path(2, 0);
        assert!(p4_mid.similar(&p2_end).unwrap());
        // A 3-path rooted at its end is primitive and not a star's root.
        assert!(!path(3, 0).similar(&star(4)).unwrap());
    }

    #[test]
    fn real_stem_examples() {
        let p3 = path(3, 0);
        let stem = p3.real_stem();
        assert!(stem.is_path);
        assert_eq!(stem.edges.len(), 3);

        // Star with 4 edges; center and two opposite leaves real.
        let mut s = star(4);
        s.vertices[2].real = false;
        s.vertices[4].real = false;
        let stem = s.real_stem();
        assert!(stem.is_path);
        assert_eq!(stem.edges.len(), 2);

        // Two real leaves without their center: disconnected, flagged.
        let mut s = star(3);
        s.vertices[0].real = false;
        s.vertices[3].real = false;
        let stem = s.real_stem();
        assert!(!stem.is_path);
        assert!(stem.violation.is_some());
    }

    #[test]
    fn so7_fixture_shape() {
        let t = so7_fixture(Some(3)).unwrap();
        assert_eq!(t.edge_count(), 4);
        assert!(t.is_line());
        assert!(!t.is_star());
        assert_eq!(t.exceptional, Some((3, 1)));
        // degrees at q = 3: 1, 9*91, 81*28*4/2, 728*8, 81*26*2/2
        let degs: Vec<&str> =
            t.vertices.iter().map(|v| v.degree.as_deref().unwrap()).collect();
        assert_eq!(degs, ["1", "819", "4536", "5824", "2106"]);
        let stem = t.real_stem();
        assert!(stem.is_path);
        assert_eq!(stem.edges.len(), 4);

        assert_eq!(so7_fixture(Some(4)), Err(TreeError::EvenQ(4)));
        let sym = so7_fixture(None).unwrap();
        assert!(sym.vertices.iter().all(|v| v.degree.is_none()));
    }

    #[test]
    fn text_roundtrip() {
        for t in [star(4), path(3, 1), so7_fixture(Some(5)).unwrap()] {
            let text = t.to_text();
            let back = BrauerTree::parse_text(&text).unwrap();
            assert_eq!(back, t);
        }
    }

    #[test]
    fn validation_catches_non_trees() {
        let mut t = star(3);
        t.edges.push((1, 2, "extra".into()));
        assert!(matches!(t.validate(), Err(TreeError::NotATree(_))));

        let mut t = star(3);
        t.edges[1].2 = "e0".into();
        assert!(matches!(t.validate(), Err(TreeError::DuplicateEdgeLabel(_))));
    }
}
