//! ASCII tile diagrams.
//!
//! States with identical cell sets form one tile. Tiles get a short code
//! (first letter of the first label plus a running index per letter) and the
//! legend maps codes back to labels. A tile covering the whole grid is the
//! stopper and is left out.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use prodbasis::constructions::{Cell, ProductBasis};

const CODE_WIDTH: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tile {
    pub code: String,
    pub labels: Vec<String>,
    pub cells: Vec<Cell>,
}

/// `None` when some state has no tile metadata.
pub fn tiles(basis: &ProductBasis) -> Option<Vec<Tile>> {
    if !basis.has_tile_metadata() {
        return None;
    }
    let full = basis.dim();
    let mut tiles: Vec<Tile> = Vec::new();
    let mut per_letter: BTreeMap<char, usize> = BTreeMap::new();
    for state in basis.states() {
        let cells = state.tile_cells.clone()?;
        if cells.len() == full {
            continue;
        }
        if let Some(tile) = tiles.iter_mut().find(|t| t.cells == cells) {
            tile.labels.push(state.label.clone());
            continue;
        }
        let letter = state.label.chars().next().unwrap_or('?');
        let index = per_letter.entry(letter).or_default();
        let mut code = format!("{letter}{index}");
        code.truncate(CODE_WIDTH);
        *index += 1;
        tiles.push(Tile {
            code,
            labels: vec![state.label.clone()],
            cells,
        });
    }
    Some(tiles)
}

/// Grid with one column per A index and one row per B index, then the legend.
pub fn render(basis: &ProductBasis) -> Option<String> {
    let tiles = tiles(basis)?;
    let (d_a, d_b) = (basis.d_a(), basis.d_b());
    let mut grid = vec![vec![String::new(); d_a]; d_b];
    for tile in &tiles {
        for &(col, row) in &tile.cells {
            let slot = &mut grid[row][col];
            if !slot.is_empty() {
                slot.push('/');
            }
            slot.push_str(&tile.code);
        }
    }

    let mut out = String::new();
    let _ = write!(out, "{:>4} |", "B\\A");
    for col in 0..d_a {
        let _ = write!(out, " {col:^w$}", w = CODE_WIDTH);
    }
    out.push('\n');
    let _ = writeln!(out, "{}", "-".repeat(6 + d_a * (CODE_WIDTH + 1)));
    for (row, cells) in grid.iter().enumerate() {
        let _ = write!(out, "{row:>4} |");
        for cell in cells {
            let mut text = if cell.is_empty() {
                ".".to_owned()
            } else {
                cell.clone()
            };
            text.truncate(CODE_WIDTH);
            let _ = write!(out, " {text:^w$}", w = CODE_WIDTH);
        }
        out.push('\n');
    }
    out.push('\n');
    for tile in &tiles {
        let _ = writeln!(
            out,
            "{:<w$} {}",
            tile.code,
            tile.labels.join(", "),
            w = CODE_WIDTH
        );
    }
    let stoppers: Vec<&str> = basis
        .states()
        .iter()
        .filter(|s| {
            s.tile_cells
                .as_ref()
                .is_some_and(|c| c.len() == basis.dim())
        })
        .map(|s| s.label.as_str())
        .collect();
    if !stoppers.is_empty() {
        let _ = writeln!(out, "(full-grid state {} not drawn)", stoppers.join(", "));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use prodbasis::constructions::{cartesian_basis, gen_tiles1, gen_tiles2};

    #[test]
    fn gen_tiles1_4_vertical_tiles() {
        let basis = gen_tiles1(4).unwrap();
        let tiles = tiles(&basis).unwrap();
        // One V and one H tile per column/row position; the stopper is dropped.
        assert_eq!(tiles.len(), 8);
        for k in 0..4 {
            let v = tiles
                .iter()
                .find(|t| t.labels == [format!("V[m=1,k={k}]")])
                .unwrap();
            let mut expected = vec![(k, (k + 1) % 4), (k, (k + 2) % 4)];
            expected.sort();
            assert_eq!(v.cells, expected);
        }
    }

    #[test]
    fn gen_tiles2_short_tiles() {
        let basis = gen_tiles2(3, 4).unwrap();
        let tiles = tiles(&basis).unwrap();
        for j in 0..3 {
            let s = tiles
                .iter()
                .find(|t| t.labels == [format!("S[j={j}]")])
                .unwrap();
            let mut expected = vec![(j, j), ((j + 1) % 3, j)];
            expected.sort();
            assert_eq!(s.cells, expected);
        }
    }

    #[test]
    fn shared_supports_share_a_code() {
        let tiles = tiles(&gen_tiles1(6).unwrap()).unwrap();
        let v0 = tiles.iter().find(|t| t.code == "V0").unwrap();
        assert_eq!(v0.labels, ["V[m=1,k=0]", "V[m=2,k=0]"]);
    }

    #[test]
    fn every_cell_but_the_stopper_is_covered() {
        let text = render(&gen_tiles1(4).unwrap()).unwrap();
        let grid_rows: Vec<&str> = text.lines().skip(2).take(4).collect();
        assert!(grid_rows.iter().all(|r| !r.contains(" . ")));
        assert!(text.contains("(full-grid state F not drawn)"));
        // Cell (0,0) lies in the horizontal tile of row 0.
        assert!(grid_rows[0]
            .split('|')
            .nth(1)
            .unwrap()
            .split_whitespace()
            .next()
            .unwrap()
            .starts_with('H'));
    }

    #[test]
    fn grid_without_metadata_is_refused() {
        assert!(render(&cartesian_basis(2, 2).unwrap()).is_none());
    }
}
