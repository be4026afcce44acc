//! Text drawings of diagrams in French convention: row 1 is printed last,
//! so the picture reads bottom-up like the figures it mirrors.

use std::fmt;
use std::str::FromStr;

use crate::characters::Ribbon;
use crate::decomposition::{StairsDecomposition, ThickHookDecomposition};
use crate::excited::ExcitedDiagram;
use crate::partition::{Cell, Partition};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RenderStyle {
    #[default]
    Ascii,
    Unicode,
}

impl FromStr for RenderStyle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "ascii" => Ok(RenderStyle::Ascii),
            "unicode" => Ok(RenderStyle::Unicode),
            other => Err(format!("unknown render style {other:?} (expected ascii or unicode)")),
        }
    }
}

impl fmt::Display for RenderStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RenderStyle::Ascii => "ascii",
            RenderStyle::Unicode => "unicode",
        })
    }
}

impl RenderStyle {
    fn plain(self) -> char {
        match self {
            RenderStyle::Ascii => 'o',
            RenderStyle::Unicode => '□',
        }
    }

    fn filled(self) -> char {
        match self {
            RenderStyle::Ascii => '#',
            RenderStyle::Unicode => '■',
        }
    }
}

/// Draws `p` with one glyph per box, chosen by `glyph`.
pub fn render_with(p: &Partition, glyph: impl Fn(Cell) -> char) -> String {
    let mut out = String::new();
    for row in (1..=p.len()).rev() {
        let line: Vec<String> =
            (1..=p.row_len(row)).map(|col| glyph(Cell::new(row, col)).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    if p.is_empty() {
        out.push_str("(empty)\n");
    }
    out
}

pub fn render_partition(p: &Partition, style: RenderStyle) -> String {
    render_with(p, |_| style.plain())
}

/// Boxes of `diagram` filled, the rest of `outer` plain.
pub fn render_excited(outer: &Partition, diagram: &ExcitedDiagram, style: RenderStyle) -> String {
    render_with(outer, |c| if diagram.contains(c) { style.filled() } else { style.plain() })
}

/// Marker for the `i`-th piece (0-based): digits, then letters.
fn marker(i: usize) -> char {
    const MARKERS: &[u8] = b"123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    MARKERS.get(i).map_or('?', |&b| b as char)
}

/// Each box labelled by the thick hook it belongs to.
pub fn render_thick_hooks(d: &ThickHookDecomposition) -> String {
    render_with(d.source(), |c| d.hook_of(c).map_or('?', marker))
}

/// Each box labelled by its line; rows and columns alternate per diagonal.
pub fn render_stairs(s: &StairsDecomposition) -> String {
    let lines: Vec<Vec<Cell>> = s.lines().iter().map(|l| l.cells()).collect();
    render_with(s.source(), |c| {
        lines.iter().position(|cells| cells.contains(&c)).map_or('?', marker)
    })
}

/// The ribbon's boxes filled, the remainder plain.
pub fn render_ribbon(p: &Partition, ribbon: &Ribbon, style: RenderStyle) -> String {
    render_with(p, |c| if ribbon.contains(c) { style.filled() } else { style.plain() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{build_thick_hook_decomposition, stairs_decomposition};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn longest_row_is_printed_last() {
        assert_eq!(render_partition(&p(&[3, 1]), RenderStyle::Ascii), "o\no o o\n");
        assert_eq!(render_partition(&p(&[2]), RenderStyle::Unicode), "□ □\n");
        assert_eq!(render_partition(&Partition::empty(), RenderStyle::Ascii), "(empty)\n");
    }

    #[test]
    fn excited_and_decomposition_markers() {
        let lam = p(&[2, 2]);
        let e = ExcitedDiagram::unexcited(&p(&[1]));
        assert_eq!(render_excited(&lam, &e, RenderStyle::Ascii), "o o\n# o\n");
        let d = build_thick_hook_decomposition(&lam, 3).unwrap();
        assert_eq!(render_thick_hooks(&d), "1 1\n1 1\n");
        let s = stairs_decomposition(&p(&[3, 2]));
        assert_eq!(render_stairs(&s), "2 3\n1 1 1\n");
    }
}
