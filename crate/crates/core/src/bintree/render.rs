use super::Tree;

/// Renders a tree as indented text rows.
///
/// A tip is its rendered payload. A `Bin` node is drawn as `*-` followed by
/// its left subtree on the same row; the left subtree's remaining rows hang
/// off a `|` rail, and the right subtree starts below the node marker with
/// `` `- ``. Every line ends with `\n`.
///
/// ```
/// use bintab::bintree::{render_ascii, Tree};
///
/// let t = Tree::bin(Tree::tip_s("b"), Tree::tip_z("a"));
/// assert_eq!(render_ascii(&t, |p| p.to_string()), "*-b\n`-a\n");
/// ```
pub fn render_ascii<P>(t: &Tree<P>, mut payload: impl FnMut(&P) -> String) -> String {
    let mut out = String::new();
    for line in rows(t, &mut payload) {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

fn rows<P, F: FnMut(&P) -> String>(t: &Tree<P>, payload: &mut F) -> Vec<String> {
    match t {
        Tree::TipZ(p) | Tree::TipS(p) => vec![payload(p)],
        Tree::Bin(l, r) => {
            let left = rows(l, payload);
            let right = rows(r, payload);
            let mut out = Vec::with_capacity(left.len() + right.len());
            for (i, line) in left.into_iter().enumerate() {
                out.push(if i == 0 { format!("*-{line}") } else { format!("| {line}") });
            }
            for (i, line) in right.into_iter().enumerate() {
                out.push(if i == 0 { format!("`-{line}") } else { format!("  {line}") });
            }
            out
        }
    }
}
