//! Uniform bucket grid answering "is any sample point strictly closer than
//! `radius` to this center" with early exit.

use crate::geom::Point2;

#[derive(Debug, Clone)]
pub(crate) struct PointGrid<'a> {
    points: &'a [Point2],
    min: Point2,
    cell: f64,
    nx: usize,
    ny: usize,
    /// CSR layout: indices of points in cell `c` are `items[starts[c]..starts[c + 1]]`.
    starts: Vec<usize>,
    items: Vec<u32>,
}

impl<'a> PointGrid<'a> {
    /// Builds a grid whose cells are at least `min_cell` wide, coarsened so the
    /// cell count stays proportional to the number of points.
    pub(crate) fn new(points: &'a [Point2], min_cell: f64) -> Self {
        let n = points.len().max(1);
        let (mut lo, mut hi) = (
            Point2::new(f64::MAX, f64::MAX),
            Point2::new(f64::MIN, f64::MIN),
        );
        for p in points {
            lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        if points.is_empty() {
            lo = Point2::ORIGIN;
            hi = Point2::ORIGIN;
        }
        let w = (hi.x - lo.x).max(f64::MIN_POSITIVE);
        let h = (hi.y - lo.y).max(f64::MIN_POSITIVE);
        let mut cell = min_cell.max((w * h / n as f64).sqrt());
        if !(cell.is_finite() && cell > 0.0) {
            cell = w.max(h).max(1.0);
        }
        let max_cells = 4 * n + 16;
        loop {
            let nx = (w / cell).floor() as usize + 1;
            let ny = (h / cell).floor() as usize + 1;
            if nx.saturating_mul(ny) <= max_cells {
                break;
            }
            cell *= 1.5;
        }
        let nx = (w / cell).floor() as usize + 1;
        let ny = (h / cell).floor() as usize + 1;

        let mut grid = PointGrid {
            points,
            min: lo,
            cell,
            nx,
            ny,
            starts: vec![0; nx * ny + 1],
            items: vec![0; points.len()],
        };
        let cell_of: Vec<usize> = points
            .iter()
            .map(|&p| {
                let (cx, cy) = grid.cell_coords(p);
                cy * nx + cx
            })
            .collect();
        for &c in &cell_of {
            grid.starts[c + 1] += 1;
        }
        for c in 0..nx * ny {
            grid.starts[c + 1] += grid.starts[c];
        }
        let mut fill = grid.starts.clone();
        for (idx, &c) in cell_of.iter().enumerate() {
            grid.items[fill[c]] = idx as u32;
            fill[c] += 1;
        }
        grid
    }

    fn cell_coords(&self, p: Point2) -> (usize, usize) {
        let fx = ((p.x - self.min.x) / self.cell).floor();
        let fy = ((p.y - self.min.y) / self.cell).floor();
        let cx = if fx.is_finite() && fx > 0.0 {
            (fx as usize).min(self.nx - 1)
        } else {
            0
        };
        let cy = if fy.is_finite() && fy > 0.0 {
            (fy as usize).min(self.ny - 1)
        } else {
            0
        };
        (cx, cy)
    }

    /// Signed cell coordinate of `p`, unclamped.
    fn raw_cell(&self, p: Point2) -> (i64, i64) {
        let fx = ((p.x - self.min.x) / self.cell).floor();
        let fy = ((p.y - self.min.y) / self.cell).floor();
        (fx.clamp(-1e15, 1e15) as i64, fy.clamp(-1e15, 1e15) as i64)
    }

    fn cell_min_dist_sq(&self, cx: i64, cy: i64, p: Point2) -> f64 {
        let x0 = self.min.x + cx as f64 * self.cell;
        let y0 = self.min.y + cy as f64 * self.cell;
        let dx = (x0 - p.x).max(0.0).max(p.x - (x0 + self.cell));
        let dy = (y0 - p.y).max(0.0).max(p.y - (y0 + self.cell));
        dx * dx + dy * dy
    }

    /// True if some point other than those in `exclude` lies at squared
    /// distance strictly below `radius_sq` from `center`.
    pub(crate) fn any_within(&self, center: Point2, radius_sq: f64, exclude: [usize; 2]) -> bool {
        if radius_sq <= 0.0 || self.points.is_empty() {
            return false;
        }
        let radius = radius_sq.sqrt();
        let (ccx, ccy) = self.raw_cell(center);
        let (lx, ly) = self.raw_cell(center - Point2::new(radius, radius));
        let (hx, hy) = self.raw_cell(center + Point2::new(radius, radius));
        let lx = lx.max(0);
        let ly = ly.max(0);
        let hx = hx.min(self.nx as i64 - 1);
        let hy = hy.min(self.ny as i64 - 1);
        if lx > hx || ly > hy {
            return false;
        }
        // Rings of cells in Chebyshev distance from the center cell, so that
        // occupied disks usually exit on the first cell.
        let max_ring = (ccx - lx)
            .abs()
            .max((hx - ccx).abs())
            .max((ccy - ly).abs())
            .max((hy - ccy).abs());
        for ring in 0..=max_ring {
            let y_from = (ccy - ring).max(ly);
            let y_to = (ccy + ring).min(hy);
            for cy in y_from..=y_to {
                let on_edge_row = (cy - ccy).abs() == ring;
                for cx in (ccx - ring).max(lx)..=(ccx + ring).min(hx) {
                    if !on_edge_row && (cx - ccx).abs() != ring {
                        continue;
                    }
                    if self.cell_min_dist_sq(cx, cy, center) >= radius_sq {
                        continue;
                    }
                    let c = cy as usize * self.nx + cx as usize;
                    for &k in &self.items[self.starts[c]..self.starts[c + 1]] {
                        let k = k as usize;
                        if k == exclude[0] || k == exclude[1] {
                            continue;
                        }
                        if self.points[k].dist_sq(center) < radius_sq {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// Indices of points at squared distance strictly below `radius_sq`.
    pub(crate) fn within(&self, center: Point2, radius_sq: f64) -> Vec<usize> {
        let mut out = Vec::new();
        if radius_sq <= 0.0 {
            return out;
        }
        let radius = radius_sq.sqrt();
        let (lx, ly) = self.raw_cell(center - Point2::new(radius, radius));
        let (hx, hy) = self.raw_cell(center + Point2::new(radius, radius));
        for cy in ly.max(0)..=hy.min(self.ny as i64 - 1) {
            for cx in lx.max(0)..=hx.min(self.nx as i64 - 1) {
                let c = cy as usize * self.nx + cx as usize;
                for &k in &self.items[self.starts[c]..self.starts[c + 1]] {
                    if self.points[k as usize].dist_sq(center) < radius_sq {
                        out.push(k as usize);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}
