//! SVG and ASCII pictures of windmills, and text diagrams of orbit chains.
//!
//! Layout, in screen coordinates (y grows downward) with the central square
//! at `[0, x] × [0, x]`:
//!
//! ```text
//! right  arm  [x, x+z]   × [0, y]
//! bottom arm  [x−y, x]   × [x, x+z]
//! left   arm  [−z, 0]    × [x−y, x]
//! top    arm  [0, y]     × [−z, 0]
//! ```
//!
//! Each arm is the previous one turned a quarter about the square's centre,
//! and none of them overlap, so the covered area is exactly `x² + 4yz`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::nat::Natural;
use crate::solver::{check_applicable, start_triple, SolveError};
use crate::windmill::{flip, mind, zagier, Triple};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("triple {0} has a zero component")]
    ImproperTriple(String),
    #[error("cell size must be at least 1")]
    ZeroCellSize,
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Svg,
    Ascii,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub triple: Triple<u64>,
    pub format: Format,
    /// SVG pixels per unit.
    pub cell_size: u32,
    pub show_mind: bool,
}

impl RenderSpec {
    pub fn new(triple: Triple<u64>, format: Format) -> Self {
        RenderSpec {
            triple,
            format,
            cell_size: 12,
            show_mind: false,
        }
    }
}

/// Axis-aligned rectangle in unit coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rect {
    pub x: i128,
    pub y: i128,
    pub w: i128,
    pub h: i128,
}

impl Rect {
    fn contains_cell(&self, cx: i128, cy: i128) -> bool {
        cx >= self.x && cx < self.x + self.w && cy >= self.y && cy < self.y + self.h
    }
}

/// The square followed by the right, bottom, left and top arms.
pub fn windmill_rects(t: &Triple<u64>) -> [Rect; 5] {
    let (x, y, z) = (t.x as i128, t.y as i128, t.z as i128);
    [
        Rect {
            x: 0,
            y: 0,
            w: x,
            h: x,
        },
        Rect {
            x,
            y: 0,
            w: z,
            h: y,
        },
        Rect {
            x: x - y,
            y: x,
            w: y,
            h: z,
        },
        Rect {
            x: -z,
            y: x - y,
            w: z,
            h: y,
        },
        Rect {
            x: 0,
            y: -z,
            w: y,
            h: z,
        },
    ]
}

/// The dashed mind square, centred on the central square.
pub fn mind_rect(t: &Triple<u64>) -> Rect {
    let m = mind(t) as i128;
    let offset = (m - t.x as i128) / 2;
    Rect {
        x: -offset,
        y: -offset,
        w: m,
        h: m,
    }
}

fn bounds(t: &Triple<u64>) -> (i128, i128) {
    let (x, y, z) = (t.x as i128, t.y as i128, t.z as i128);
    ((-z).min(x - y), (x + z).max(y))
}

pub fn render_windmill(spec: &RenderSpec) -> Result<String, RenderError> {
    if !spec.triple.is_proper() {
        return Err(RenderError::ImproperTriple(spec.triple.to_string()));
    }
    if spec.cell_size == 0 {
        return Err(RenderError::ZeroCellSize);
    }
    Ok(match spec.format {
        Format::Svg => svg(spec),
        Format::Ascii => ascii(&spec.triple),
    })
}

fn ascii(t: &Triple<u64>) -> String {
    let rects = windmill_rects(t);
    let (lo, hi) = bounds(t);
    let mut out = String::new();
    for cy in lo..hi {
        for cx in lo..hi {
            let c = if rects[0].contains_cell(cx, cy) {
                '#'
            } else if rects[1..].iter().any(|r| r.contains_cell(cx, cy)) {
                'o'
            } else {
                ' '
            };
            out.push(c);
        }
        out.push('\n');
    }
    out
}

fn svg(spec: &RenderSpec) -> String {
    let t = &spec.triple;
    let cell = spec.cell_size as i128;
    let (lo, hi) = bounds(t);
    let side = (hi - lo) * cell;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{side}\" height=\"{side}\" viewBox=\"0 0 {side} {side}\">"
    );
    let _ = writeln!(out, "  <title>windmill {t}</title>");
    let place = |r: &Rect| ((r.x - lo) * cell, (r.y - lo) * cell, r.w * cell, r.h * cell);
    for (i, r) in windmill_rects(t).iter().enumerate() {
        let (px, py, w, h) = place(r);
        let (class, fill) = if i == 0 {
            ("square", "#3b6ea5")
        } else {
            ("arm", "#e0a030")
        };
        let _ = writeln!(
            out,
            "  <rect class=\"{class}\" x=\"{px}\" y=\"{py}\" width=\"{w}\" height=\"{h}\" fill=\"{fill}\" stroke=\"#000000\" stroke-width=\"1\"/>"
        );
    }
    if spec.show_mind {
        let (px, py, w, h) = place(&mind_rect(t));
        let _ = writeln!(
            out,
            "  <rect class=\"mind\" x=\"{px}\" y=\"{py}\" width=\"{w}\" height=\"{h}\" fill=\"none\" stroke=\"#c00000\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>"
        );
    }
    out.push_str("</svg>\n");
    out
}

/// The `zagier ∘ flip` chain from `(1, 1, n div 4)`, one line per map
/// application, stopping at the first flip or Zagier fixed point.
pub fn render_orbit<T: Natural>(n: &T) -> Result<String, RenderError> {
    check_applicable(n).map_err(SolveError::Inapplicable)?;
    let cap = crate::nat::cube_cap(n);
    let start = start_triple(n);
    let mut out = String::new();
    let _ = writeln!(out, "zagier∘flip chain for n = {n}");
    let _ = write!(out, "{start}  start, zagier-fixed");
    let mut t = start;
    let mut steps = 0u64;
    loop {
        if t.is_flip_fixed() {
            let v = t.y.clone() + t.z.clone();
            let _ = writeln!(out, "  flip-fixed: {n} = {}^2 + {v}^2", t.x);
            break;
        }
        if steps > 0 && t.is_zagier_fixed() {
            if t.x.is_one() {
                return Err(SolveError::NoFlipFixedPoint.into());
            }
            let _ = writeln!(out, "  zagier-fixed: factor {}", t.x);
            break;
        }
        if steps == cap {
            return Err(SolveError::CapExhausted(cap).into());
        }
        let flipped = flip(&t);
        let _ = write!(out, "\n  flip   -> {flipped}");
        let next = zagier(&flipped);
        let _ = write!(out, "\n  zagier -> {next}");
        t = next;
        steps += 1;
    }
    let _ = writeln!(out, "steps: {steps}");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_ascii() {
        let s = render_windmill(&RenderSpec::new(Triple::new(1, 1, 1), Format::Ascii)).unwrap();
        assert_eq!(s, " o \no#o\n o \n");
    }

    #[test]
    fn improper_rejected() {
        let r = render_windmill(&RenderSpec::new(Triple::new(0, 1, 1), Format::Svg));
        assert_eq!(r, Err(RenderError::ImproperTriple("(0,1,1)".into())));
        let mut spec = RenderSpec::new(Triple::new(1, 1, 1), Format::Svg);
        spec.cell_size = 0;
        assert_eq!(render_windmill(&spec), Err(RenderError::ZeroCellSize));
    }

    #[test]
    fn mind_rect_side() {
        assert_eq!(
            mind_rect(&Triple::new(3, 8, 1)),
            Rect {
                x: -1,
                y: -1,
                w: 5,
                h: 5
            }
        );
        assert_eq!(mind_rect(&Triple::new(5, 1, 1)).w, 5);
    }

    #[test]
    fn orbit_chain_29() {
        let s = render_orbit(&29u64).unwrap();
        let expected = "zagier∘flip chain for n = 29\n\
(1,1,7)  start, zagier-fixed\n  flip   -> (1,7,1)\n  zagier -> (3,1,5)\n  flip   -> (3,5,1)\n  zagier -> (5,1,1)  flip-fixed: 29 = 5^2 + 2^2\nsteps: 2\n";
        assert_eq!(s, expected);
    }

    #[test]
    fn orbit_chain_small_and_composite() {
        let s = render_orbit(&5u64).unwrap();
        assert!(s.contains("(1,1,1)  start, zagier-fixed  flip-fixed: 5 = 1^2 + 2^2"));
        assert!(!s.contains("->"));
        let s = render_orbit(&21u64).unwrap();
        assert!(
            s.contains("zagier -> (3,3,1)  zagier-fixed: factor 3"),
            "{s}"
        );
        assert!(matches!(
            render_orbit(&27u64),
            Err(RenderError::Solve(SolveError::Inapplicable(_)))
        ));
    }
}
