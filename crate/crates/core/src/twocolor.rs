//! Balanced bit pairs and the recursive book embedding of 2-colored paths.
//!
//! The embedding of a path `v_0 .. v_{n-1}` (vertex ids are path positions,
//! edge `i` joins `v_i` and `v_{i+1}`) satisfies:
//!
//! * (a) every edge crosses the spine once or twice;
//! * (b) every two spine-consecutive vertices have a gap between them that
//!   is visible from below;
//! * (c) every crossing item is visible from below;
//! * (d) `v_0` is visible from above, and `v_{n-1}` reaches, with a top arc,
//!   a below-visible gap on its right that has at most one vertex and no
//!   crossing to its right.
//!
//! Every edge starts with a top arc at its path-earlier endpoint; the
//! multicolor engines depend on that.

use crate::bookembed::{gap_visibility, BookEmbedding, Page, RawArc};
use crate::error::{Error, Result};
use crate::model::{count_colors, Color, ColoredSequence};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitPair {
    pub p_bits: Vec<u8>,
    pub s_bits: Vec<u8>,
}

impl BitPair {
    pub fn new(p_bits: Vec<u8>, s_bits: Vec<u8>) -> Self {
        BitPair { p_bits, s_bits }
    }

    /// Parses two strings of `'0'`/`'1'`.
    pub fn from_strs(p: &str, s: &str) -> Self {
        let bits = |x: &str| x.bytes().map(|b| (b == b'1') as u8).collect();
        BitPair::new(bits(p), bits(s))
    }

    pub fn len(&self) -> usize {
        self.p_bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p_bits.is_empty()
    }

    fn check_lengths(&self) -> Result<()> {
        if self.p_bits.len() != self.s_bits.len() {
            return Err(Error::Precondition(format!(
                "bit strings have lengths {} and {}",
                self.p_bits.len(),
                self.s_bits.len()
            )));
        }
        Ok(())
    }
}

pub fn is_balanced(pair: &BitPair) -> Result<bool> {
    pair.check_lengths()?;
    let zeros = |b: &[u8]| b.iter().filter(|&&x| x == 0).count();
    Ok(zeros(&pair.p_bits) == zeros(&pair.s_bits))
}

/// Shortest balanced prefix, found by tracking the difference of 0-counts.
pub fn minimal_balanced_prefix(pair: &BitPair) -> Result<usize> {
    if !is_balanced(pair)? {
        return Err(Error::Precondition("pair is not balanced".into()));
    }
    if pair.is_empty() {
        return Err(Error::Precondition("pair is empty".into()));
    }
    let mut delta: i64 = 0;
    for (l, (&p, &s)) in pair.p_bits.iter().zip(&pair.s_bits).enumerate() {
        let prev = delta;
        delta += (p == 0) as i64 - (s == 0) as i64;
        assert!((delta - prev).abs() <= 1, "difference moved by more than one");
        if delta == 0 {
            return Ok(l + 1);
        }
    }
    unreachable!("a balanced pair has a balanced prefix of full length")
}

/// For a minimally balanced pair of length `k > 1`: the first and last path
/// bits differ, and they reappear swapped at the ends of the sequence.
pub fn check_twin_chunks(pair: &BitPair) -> Result<bool> {
    let k = pair.len();
    if k <= 1 || minimal_balanced_prefix(pair)? != k {
        return Err(Error::Precondition("not a minimally balanced pair of length > 1".into()));
    }
    let (p, s) = (&pair.p_bits, &pair.s_bits);
    Ok(p[0] != p[k - 1] && p[k - 1] == s[0] && p[0] == s[k - 1])
}

/// Spine under construction: `Some(v)` for vertices, `None` for crossings.
#[derive(Debug, Clone, Default)]
struct Layout {
    items: Vec<Option<usize>>,
    arcs: Vec<RawArc>,
}

impl Layout {
    fn position(&self, v: usize) -> usize {
        self.items.iter().position(|&x| x == Some(v)).expect("vertex placed")
    }

    fn append(&mut self, other: Layout) {
        let off = self.items.len();
        self.items.extend(other.items);
        self.arcs.extend(other.arcs.into_iter().map(|a| RawArc {
            a: a.a + off,
            b: a.b + off,
            ..a
        }));
    }

    /// Inserts `item` into gap `g` and returns its index.
    fn insert(&mut self, g: usize, item: Option<usize>) -> usize {
        self.items.insert(g, item);
        for a in &mut self.arcs {
            if a.a >= g {
                a.a += 1;
            }
            if a.b >= g {
                a.b += 1;
            }
        }
        g
    }

    fn arc(&mut self, a: usize, b: usize, page: Page, edge: usize) {
        self.arcs.push(RawArc { a, b, page, edge });
    }

    /// Leftmost gap right of the item at `pos` that is visible from below,
    /// reachable from `pos` by a top arc, and followed by at most one vertex
    /// and no crossing.
    fn access_gap(&self, pos: usize) -> usize {
        let m = self.items.len();
        let mut first_candidate = m;
        let mut vertices = 0;
        for g in (pos + 1..m).rev() {
            match self.items[g] {
                None => break,
                Some(_) if vertices == 1 => break,
                Some(_) => vertices += 1,
            }
            first_candidate = g;
        }
        let spans: Vec<_> = self
            .arcs
            .iter()
            .map(|a| crate::bookembed::ArcSpan {
                left: a.a.min(a.b),
                right: a.a.max(a.b),
                page: a.page,
            })
            .collect();
        let below = gap_visibility(m, &spans, Page::Bottom);
        (first_candidate..=m)
            .find(|&g| {
                below[g]
                    && spans
                        .iter()
                        .filter(|s| s.page == Page::Top && s.left != pos && s.right != pos)
                        .all(|s| {
                            let inside = |i: usize| pos < i && i < g;
                            inside(s.left) == inside(s.right)
                        })
            })
            .expect("last vertex is hook visible from the right")
    }
}

fn build(colors: &[Color], sigma: &[Color], first: usize) -> Layout {
    let n = colors.len();
    let mut out = Layout::default();
    match n {
        0 => return out,
        1 => {
            out.items.push(Some(first));
            return out;
        }
        2 => {
            let (v1, v2) = (first, first + 1);
            if colors[0] == colors[1] || (sigma[0] == colors[1] && sigma[1] == colors[0]) {
                out.items = vec![None, Some(v2), Some(v1)];
                out.arc(0, 2, Page::Top, first);
                out.arc(0, 1, Page::Bottom, first);
            } else {
                out.items = vec![Some(v1), None, None, Some(v2)];
                out.arc(0, 1, Page::Top, first);
                out.arc(1, 2, Page::Bottom, first);
                out.arc(2, 3, Page::Top, first);
            }
            return out;
        }
        _ => {}
    }
    let pair = to_bits(colors, sigma);
    let k = minimal_balanced_prefix(&pair).expect("compatible input is balanced");
    if k == n {
        // Strip both ends; the outer two vertices are placed around the inner embedding.
        let inner = build(&colors[1..n - 1], &sigma[1..n - 1], first + 1);
        let (u1, un) = (first + 1, first + n - 2);
        let gap = inner.access_gap(inner.position(un));
        let m = inner.items.len();
        out.items = vec![None, Some(first + n - 1), None];
        out.append(inner);
        let chi_c = out.insert(gap + 3, None);
        out.items.push(None);
        out.items.push(Some(first));
        let (chi_a, p1, chi_b, chi_d, p2) = (0, 1, 2, m + 4, m + 5);
        let pu1 = out.position(u1);
        let pun = out.position(un);
        out.arc(p2, chi_a, Page::Top, first);
        out.arc(chi_a, chi_b, Page::Bottom, first);
        out.arc(chi_b, pu1, Page::Top, first);
        out.arc(pun, chi_c, Page::Top, first + n - 2);
        out.arc(chi_c, chi_d, Page::Bottom, first + n - 2);
        out.arc(chi_d, p1, Page::Top, first + n - 2);
    } else {
        let left = build(&colors[..k], &sigma[..k], first);
        let right = build(&colors[k..], &sigma[k..], first + k);
        let last = first + k - 1;
        let gap = left.access_gap(left.position(last));
        out = left;
        let q = out.insert(gap, None);
        let q2 = out.items.len();
        out.items.push(None);
        let off = out.items.len();
        let w1 = right.position(first + k) + off;
        out.append(right);
        let pl = out.position(last);
        out.arc(pl, q, Page::Top, last);
        out.arc(q, q2, Page::Bottom, last);
        out.arc(q2, w1, Page::Top, last);
    }
    out
}

fn to_bits(colors: &[Color], sigma: &[Color]) -> BitPair {
    let zero = colors.iter().chain(sigma).copied().min().unwrap_or(0);
    let bit = |c: &Color| (*c != zero) as u8;
    BitPair::new(colors.iter().map(bit).collect(), sigma.iter().map(bit).collect())
}

fn check_input(colors: &[Color], sigma: &ColoredSequence) -> Result<()> {
    let counts = count_colors(colors);
    if counts.len() > 2 {
        return Err(Error::Precondition(format!(
            "path uses {} colors, expected at most 2",
            counts.len()
        )));
    }
    if counts != count_colors(sigma.as_slice()) {
        return Err(Error::Incompatible("color counts of path and sequence differ".into()));
    }
    Ok(())
}

/// Book embedding of the 2-colored path with vertex colors `colors` (in
/// path order) consistent with `sigma`, with properties (a)-(d).
pub fn embed_two_colored_path(colors: &[Color], sigma: &ColoredSequence) -> Result<BookEmbedding> {
    check_input(colors, sigma)?;
    let layout = build(colors, sigma.as_slice(), 0);
    let edges = (1..colors.len()).map(|i| (i - 1, i)).collect();
    BookEmbedding::assemble(layout.items, layout.arcs, colors.to_vec(), edges)
}

/// The same embedding with both pages swapped.
pub fn embed_two_colored_path_reflected(colors: &[Color], sigma: &ColoredSequence) -> Result<BookEmbedding> {
    Ok(embed_two_colored_path(colors, sigma)?.reflect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bookembed::{validate_book_embedding, SpineItem};

    fn brute_min_prefix(p: &BitPair) -> usize {
        (1..=p.len())
            .find(|&l| {
                let z = |b: &[u8]| b.iter().filter(|&&x| x == 0).count();
                z(&p.p_bits[..l]) == z(&p.s_bits[..l])
            })
            .unwrap()
    }

    #[test]
    fn balance_examples() {
        assert!(is_balanced(&BitPair::from_strs("", "")).unwrap());
        assert!(is_balanced(&BitPair::from_strs("01", "10")).unwrap());
        assert!(!is_balanced(&BitPair::from_strs("01", "00")).unwrap());
        assert!(is_balanced(&BitPair::from_strs("0", "01")).is_err());
    }

    #[test]
    fn minimal_prefix_examples() {
        for (p, s, want) in [("0", "0", 1), ("01", "10", 2), ("0011", "0101", 1)] {
            let pair = BitPair::from_strs(p, s);
            assert_eq!(brute_min_prefix(&pair), want);
            assert_eq!(minimal_balanced_prefix(&pair).unwrap(), want);
        }
        assert!(minimal_balanced_prefix(&BitPair::from_strs("01", "00")).is_err());
    }

    #[test]
    fn twin_chunks_examples() {
        assert!(check_twin_chunks(&BitPair::from_strs("01", "10")).unwrap());
        assert!(check_twin_chunks(&BitPair::from_strs("10", "01")).unwrap());
        assert!(check_twin_chunks(&BitPair::from_strs("0", "0")).is_err());
        assert!(check_twin_chunks(&BitPair::from_strs("0011", "0101")).is_err());
    }

    #[test]
    fn single_vertex() {
        let be = embed_two_colored_path(&[1], &ColoredSequence(vec![1])).unwrap();
        assert_eq!(be.spine, vec![SpineItem::Vertex { id: 0 }]);
        assert!(be.arcs.is_empty());
    }

    #[test]
    fn reversed_base_case_layout() {
        let be = embed_two_colored_path(&[0, 1], &ColoredSequence(vec![1, 0])).unwrap();
        assert_eq!(
            be.spine,
            vec![
                SpineItem::Crossing { edge: 0, ordinal: 1 },
                SpineItem::Vertex { id: 1 },
                SpineItem::Vertex { id: 0 },
            ]
        );
        let pages: Vec<_> = be.arcs.iter().map(|a| (a.left, a.right, a.page)).collect();
        assert!(pages.contains(&(0, 2, Page::Top)));
        assert!(pages.contains(&(0, 1, Page::Bottom)));
        assert_eq!(be.spine_crossings_per_edge().unwrap(), vec![1]);
    }

    #[test]
    fn path_order_base_case_crosses_twice() {
        let be = embed_two_colored_path(&[0, 1], &ColoredSequence(vec![0, 1])).unwrap();
        assert_eq!(be.spine_crossings_per_edge().unwrap(), vec![2]);
        assert!(validate_book_embedding(&be, Some(&ColoredSequence(vec![0, 1]))).pass());
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(embed_two_colored_path(&[0, 1, 2], &ColoredSequence(vec![0, 1, 2])).is_err());
        assert!(embed_two_colored_path(&[0, 1], &ColoredSequence(vec![0, 0])).is_err());
    }

    #[test]
    fn deterministic() {
        let c = [0, 1, 1, 0, 1, 0, 0];
        let s = ColoredSequence(vec![1, 0, 0, 1, 1, 0, 0]);
        assert_eq!(embed_two_colored_path(&c, &s).unwrap(), embed_two_colored_path(&c, &s).unwrap());
    }
}
