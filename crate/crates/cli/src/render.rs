//! Text and raster exports. One pixel per matrix entry, row-major.

use quasiorth::{QuasiBinaryMatrix, SupportSetMatrix};

use crate::document::Matrix;

pub type Rgb = [u8; 3];

pub const RED: Rgb = [200, 30, 30];
pub const BLACK: Rgb = [20, 20, 20];
pub const BLUE: Rgb = [40, 80, 200];
pub const YELLOW: Rgb = [230, 200, 40];

/// Colors for the `a`-valued and `b`-valued entries of a quasi-binary matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Palette {
    /// a -> red, b -> black.
    Forward,
    /// For inverse matrices: c -> blue, d -> yellow.
    Inverse,
}

impl Palette {
    pub fn colors(self) -> (Rgb, Rgb) {
        match self {
            Palette::Forward => (RED, BLACK),
            Palette::Inverse => (BLUE, YELLOW),
        }
    }
}

/// Plain PBM (P1): 1 is a set (black) pixel.
pub fn pbm(m: &SupportSetMatrix) -> Vec<u8> {
    let n = m.n();
    let mut out = format!("P1\n{n} {n}\n");
    for i in 0..n {
        let row: Vec<&str> = (0..n)
            .map(|j| if m.contains(i, j) { "1" } else { "0" })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out.into_bytes()
}

/// Binary PPM (P6), maxval 255.
pub fn ppm(q: &QuasiBinaryMatrix, palette: Palette) -> Vec<u8> {
    let n = q.n();
    let (a_color, b_color) = palette.colors();
    let mut out = format!("P6\n{n} {n}\n255\n").into_bytes();
    out.reserve(3 * n * n);
    for i in 0..n {
        for j in 0..n {
            let px = if q.backbone().contains(i, j) {
                b_color
            } else {
                a_color
            };
            out.extend_from_slice(&px);
        }
    }
    out
}

pub fn raster(m: &Matrix, palette: Palette) -> Vec<u8> {
    match m {
        Matrix::Binary(b) => pbm(b),
        Matrix::Quasi(q) => ppm(q, palette),
    }
}

/// Rows of entries (0/1, or field values for quasi-binary) joined by `sep`.
pub fn dense_text(m: &Matrix, sep: &str) -> String {
    let n = m.n();
    let mut out = String::new();
    for i in 0..n {
        let row: Vec<String> = (0..n)
            .map(|j| match m {
                Matrix::Binary(b) => u8::from(b.contains(i, j)).to_string(),
                Matrix::Quasi(q) => q.entry(i, j).to_string(),
            })
            .collect();
        out.push_str(&row.join(sep));
        out.push('\n');
    }
    out
}
