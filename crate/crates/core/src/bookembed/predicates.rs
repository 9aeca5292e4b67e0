use super::Page;

/// Span of an arc on a page; `left < right` are spine item indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArcSpan {
    pub left: usize,
    pub right: usize,
    pub page: Page,
}

/// For each gap `0..=m`, whether no arc on `side` spans it.
pub fn gap_visibility(m: usize, arcs: &[ArcSpan], side: Page) -> Vec<bool> {
    let mut diff = vec![0i64; m + 2];
    for a in arcs.iter().filter(|a| a.page == side) {
        diff[a.left + 1] += 1;
        diff[a.right + 1] -= 1;
    }
    let mut cover = 0;
    (0..=m)
        .map(|g| {
            cover += diff[g];
            cover == 0
        })
        .collect()
}

/// For each item, whether no arc on `side` strictly contains it.
pub fn item_visibility(m: usize, arcs: &[ArcSpan], side: Page) -> Vec<bool> {
    let mut diff = vec![0i64; m + 1];
    for a in arcs.iter().filter(|a| a.page == side) {
        if a.left + 1 < a.right {
            diff[a.left + 1] += 1;
            diff[a.right] -= 1;
        }
    }
    let mut cover = 0;
    (0..m)
        .map(|i| {
            cover += diff[i];
            cover == 0
        })
        .collect()
}

/// Gaps visible from `visible_side` that item `pos` can reach with a new
/// arc on the other page without interleaving an arc already there.
pub fn hook_gaps(m: usize, arcs: &[ArcSpan], pos: usize, visible_side: Page) -> Vec<bool> {
    let hook_page = visible_side.flip();
    let mut ok = gap_visibility(m, arcs, visible_side);
    let hook: Vec<&ArcSpan> = arcs
        .iter()
        .filter(|a| a.page == hook_page && a.left != pos && a.right != pos)
        .collect();
    for (g, slot) in ok.iter_mut().enumerate() {
        if !*slot {
            continue;
        }
        // The new arc strictly contains items in [lo, hi].
        let (lo, hi) = if g > pos { (pos + 1, g) } else { (g, pos) };
        let inside = |i: usize| lo <= i && i < hi;
        *slot = hook.iter().all(|a| inside(a.left) == inside(a.right));
    }
    ok
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(left: usize, right: usize, page: Page) -> ArcSpan {
        ArcSpan { left, right, page }
    }

    #[test]
    fn visibility_under_one_arc() {
        let arcs = [arc(0, 2, Page::Bottom)];
        assert_eq!(gap_visibility(3, &arcs, Page::Bottom), vec![true, false, false, true]);
        assert_eq!(item_visibility(3, &arcs, Page::Bottom), vec![true, false, true]);
        assert!(item_visibility(3, &arcs, Page::Top).iter().all(|&b| b));
    }

    #[test]
    fn hook_blocked_by_enclosing_arc() {
        // Item 1 sits under top arc (0,2); gaps 0 and 3 lie outside it.
        let arcs = [arc(0, 2, Page::Top)];
        let ok = hook_gaps(3, &arcs, 1, Page::Bottom);
        assert_eq!(ok, vec![false, true, true, false]);
    }
}
