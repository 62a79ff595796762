//! Pictures of tilings: a text grid for up to two dimensions and SVG for up
//! to three, where the third coordinate selects a panel.
//!
//! Coordinate 0 runs down the rows and coordinate 1 across the columns.
//! Every cell shows the index of the tile that owns it.

use std::fmt::Write;

use cobweb_core::tiling::Tiling;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    TextGrid,
    Svg,
}

const CELL: usize = 28;
const MARGIN: usize = 8;
const PANEL_GAP: usize = 14;
const TILING_GAP: usize = 20;

pub fn render_tiling(t: &Tiling, format: RenderFormat) -> Result<String> {
    match format {
        RenderFormat::TextGrid => text_grid(t),
        RenderFormat::Svg => svg(std::slice::from_ref(t)),
    }
}

/// Extents padded to three coordinates, plus the owner of every point.
fn layout(t: &Tiling, max: usize, format: &'static str) -> Result<([usize; 3], Vec<usize>)> {
    let dims = t.hyper_box.dims();
    if dims > max {
        return Err(CliError::UnsupportedDimension { format, dims, max });
    }
    let labels = t.cell_labels()?;
    let mut e = [1; 3];
    for (slot, x) in e.iter_mut().zip(t.hyper_box.extents_usize()?) {
        *slot = x;
    }
    Ok((e, labels))
}

pub fn text_grid(t: &Tiling) -> Result<String> {
    let ([rows, cols, _], labels) = layout(t, 2, "text grid")?;
    let width = labels.iter().max().map_or(1, |m| m.to_string().len());
    let mut out = String::new();
    for r in 0..rows {
        let line: Vec<String> = (0..cols)
            .map(|c| format!("{:>width$}", labels[r + c * rows]))
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    Ok(out)
}

fn fill(tile: usize) -> String {
    let hue = tile * 137 % 360;
    let light = if tile % 2 == 0 { 72 } else { 84 };
    format!("hsl({hue},55%,{light}%)")
}

/// One SVG document showing the tilings stacked top to bottom.
pub fn svg(tilings: &[Tiling]) -> Result<String> {
    let mut blocks = Vec::with_capacity(tilings.len());
    for t in tilings {
        blocks.push(layout(t, 3, "svg")?);
    }
    let block_width = |e: &[usize; 3]| e[2] * e[1] * CELL + (e[2] - 1) * PANEL_GAP;
    let width = blocks.iter().map(|(e, _)| block_width(e)).max().unwrap_or(0) + 2 * MARGIN;
    let height = blocks.iter().map(|(e, _)| e[0] * CELL).sum::<usize>()
        + blocks.len().saturating_sub(1) * TILING_GAP
        + 2 * MARGIN;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<g font-family="monospace" font-size="11" text-anchor="middle">"#);
    let mut top = MARGIN;
    for ([rows, cols, panels], labels) in &blocks {
        for p in 0..*panels {
            let left = MARGIN + p * (cols * CELL + PANEL_GAP);
            for c in 0..*cols {
                for r in 0..*rows {
                    let tile = labels[r + rows * (c + cols * p)];
                    let (x, y) = (left + c * CELL, top + r * CELL);
                    let _ = writeln!(
                        out,
                        r##"<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="{}" stroke="#333"/>"##,
                        fill(tile)
                    );
                    let _ = writeln!(
                        out,
                        r#"<text x="{}" y="{}">{tile}</text>"#,
                        x + CELL / 2,
                        y + CELL / 2 + 4
                    );
                }
            }
        }
        top += rows * CELL + TILING_GAP;
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}
