//! Compact sets K with finite sampling grids.
//!
//! Sup-norms over K always mean the maximum over the sampling grid; the grid
//! densities are configuration, not adaptivity. Grids are deterministic
//! functions of the shape and the densities.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::C64;

/// Shape of a compact region in the complex plane.
#[derive(Debug, Clone, PartialEq)]
pub enum RegionShape {
    /// Axis-aligned closed rectangle `[re_min, re_max] × [im_min, im_max]`.
    Rectangle {
        re_min: f64,
        re_max: f64,
        im_min: f64,
        im_max: f64,
    },
    /// Closed disc `|s − center| ≤ radius`.
    Disc { center: C64, radius: f64 },
}

/// A compact set with its sampling grid.
#[derive(Debug, Clone)]
pub struct CompactRegion {
    pub shape: RegionShape,
    grid: Vec<C64>,
    boundary_density: usize,
    interior_density: usize,
}

impl CompactRegion {
    pub const DEFAULT_DENSITY: usize = 64;

    /// Disc with the default 64 boundary + 64 interior sample points.
    pub fn disc(center: C64, radius: f64) -> Result<Self> {
        Self::with_density(
            RegionShape::Disc { center, radius },
            Self::DEFAULT_DENSITY,
            Self::DEFAULT_DENSITY,
        )
    }

    pub fn rectangle(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Result<Self> {
        Self::with_density(
            RegionShape::Rectangle {
                re_min,
                re_max,
                im_min,
                im_max,
            },
            Self::DEFAULT_DENSITY,
            Self::DEFAULT_DENSITY,
        )
    }

    pub fn with_density(shape: RegionShape, boundary: usize, interior: usize) -> Result<Self> {
        if boundary < 4 {
            return Err(Error::Precondition(
                "boundary grid density must be at least 4".into(),
            ));
        }
        match &shape {
            RegionShape::Disc { radius, .. } => {
                if !(*radius > 0.0) {
                    return Err(Error::Domain("disc radius must be positive".into()));
                }
            }
            RegionShape::Rectangle {
                re_min,
                re_max,
                im_min,
                im_max,
            } => {
                if !(re_min < re_max && im_min < im_max) {
                    return Err(Error::Domain("degenerate rectangle".into()));
                }
            }
        }
        let grid = Self::build_grid(&shape, boundary, interior);
        Ok(CompactRegion {
            shape,
            grid,
            boundary_density: boundary,
            interior_density: interior,
        })
    }

    fn build_grid(shape: &RegionShape, boundary: usize, interior: usize) -> Vec<C64> {
        let mut grid = Vec::with_capacity(boundary + interior);
        match shape {
            RegionShape::Disc { center, radius } => {
                for k in 0..boundary {
                    let th = core::f64::consts::TAU * (k as f64) / (boundary as f64);
                    grid.push(center + C64::new(radius * libm::cos(th), radius * libm::sin(th)));
                }
                // Sunflower layout: radius ∝ sqrt(k), golden-angle rotation.
                let ga = core::f64::consts::TAU * (1.0 - 1.0 / 1.618033988749895);
                for k in 0..interior {
                    let r = radius * libm::sqrt((k as f64 + 0.5) / (interior as f64 + 0.5));
                    let th = ga * (k as f64);
                    grid.push(center + C64::new(r * libm::cos(th), r * libm::sin(th)));
                }
            }
            RegionShape::Rectangle {
                re_min,
                re_max,
                im_min,
                im_max,
            } => {
                let per_edge = (boundary / 4).max(1);
                let w = re_max - re_min;
                let h = im_max - im_min;
                for k in 0..per_edge {
                    let t = k as f64 / per_edge as f64;
                    grid.push(C64::new(re_min + t * w, *im_min));
                    grid.push(C64::new(*re_max, im_min + t * h));
                    grid.push(C64::new(re_max - t * w, *im_max));
                    grid.push(C64::new(*re_min, im_max - t * h));
                }
                let side = libm::ceil(libm::sqrt(interior as f64)) as usize;
                let mut placed = 0;
                'outer: for i in 0..side {
                    for j in 0..side {
                        if placed >= interior {
                            break 'outer;
                        }
                        let tx = (i as f64 + 0.5) / side as f64;
                        let ty = (j as f64 + 0.5) / side as f64;
                        grid.push(C64::new(re_min + tx * w, im_min + ty * h));
                        placed += 1;
                    }
                }
            }
        }
        grid
    }

    #[inline]
    pub fn grid(&self) -> &[C64] {
        &self.grid
    }

    pub fn grid_density(&self) -> (usize, usize) {
        (self.boundary_density, self.interior_density)
    }

    /// ξ := min over the grid of Re(s).
    pub fn min_re(&self) -> f64 {
        self.grid
            .iter()
            .map(|s| s.re)
            .fold(f64::INFINITY, f64::min)
    }

    pub fn max_re(&self) -> f64 {
        self.grid
            .iter()
            .map(|s| s.re)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.grid.iter().map(|s| s.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_im(&self) -> f64 {
        self.grid
            .iter()
            .map(|s| libm::fabs(s.im))
            .fold(0.0, f64::max)
    }

    pub fn contains(&self, s: C64) -> bool {
        let eps = 1e-12;
        match &self.shape {
            RegionShape::Disc { center, radius } => (s - center).norm() <= radius * (1.0 + eps),
            RegionShape::Rectangle {
                re_min,
                re_max,
                im_min,
                im_max,
            } => {
                s.re >= re_min - eps
                    && s.re <= re_max + eps
                    && s.im >= im_min - eps
                    && s.im <= im_max + eps
            }
        }
    }

    /// Requires min Re > 0 on the grid (the algebraic-irrational pipelines).
    pub fn require_right_half_plane(&self) -> Result<f64> {
        let xi = self.min_re();
        if xi > 0.0 {
            Ok(xi)
        } else {
            Err(Error::Precondition(
                "compact set must satisfy min Re(s) > 0 on its grid".into(),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disc_grid_inside_and_sized() {
        let k = CompactRegion::disc(C64::new(1.0, 0.0), 0.5).unwrap();
        assert_eq!(k.grid().len(), 128);
        for &s in k.grid() {
            assert!(k.contains(s));
        }
        assert!((k.min_re() - 0.5).abs() < 1e-9);
    }

    #[test]
    fn rectangle_grid_inside() {
        let k = CompactRegion::rectangle(1.05, 1.5, -2.0, 2.0).unwrap();
        for &s in k.grid() {
            assert!(k.contains(s), "{s} outside");
        }
        assert!(k.min_re() >= 1.05 - 1e-12);
    }
}
