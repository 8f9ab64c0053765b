//! Scan-grid syntax: `start..stop:step`, inclusive of the start, with the
//! stop included when it lies within half a step. A bare number is a
//! single-point grid.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Grid {
    pub fn parse(text: &str) -> Result<Self, String> {
        let grid = if let Some((range, step)) = text.rsplit_once(':') {
            let (start, stop) = range
                .split_once("..")
                .ok_or_else(|| format!("grid {text:?} lacks the start..stop range"))?;
            Grid {
                start: parse_number(start)?,
                stop: parse_number(stop)?,
                step: parse_number(step)?,
            }
        } else {
            let v = parse_number(text)?;
            Grid {
                start: v,
                stop: v,
                step: 1.0,
            }
        };
        if grid.step.is_nan() || grid.step <= 0.0 {
            return Err(format!("grid step must be positive, got {}", grid.step));
        }
        if grid.points().is_empty() {
            return Err(format!("grid {text:?} contains no points"));
        }
        Ok(grid)
    }

    pub fn points(&self) -> Vec<f64> {
        let mut points = Vec::new();
        let mut i = 0usize;
        loop {
            let v = self.start + i as f64 * self.step;
            if v > self.stop + 0.5 * self.step {
                break;
            }
            points.push(v);
            i += 1;
            if i > 1_000_000 {
                break; // runaway caps are invalid input, caught by the caller
            }
        }
        points
    }
}

fn parse_number(text: &str) -> Result<f64, String> {
    let v: f64 = text
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse number {text:?}"))?;
    if !v.is_finite() {
        return Err(format!("grid bounds must be finite, got {v}"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_grid() {
        let g = Grid::parse("0..4:0.5").unwrap();
        let points = g.points();
        assert_eq!(points.len(), 9);
        assert_eq!(points[0], 0.0);
        assert_eq!(points[8], 4.0);
    }

    #[test]
    fn single_point_range() {
        let g = Grid::parse("0.75..0.75:1").unwrap();
        assert_eq!(g.points(), vec![0.75]);
    }

    #[test]
    fn scalar_is_a_one_point_grid() {
        assert_eq!(Grid::parse("2.5").unwrap().points(), vec![2.5]);
    }

    #[test]
    fn stop_within_half_a_step_is_included() {
        let g = Grid::parse("0..0.9:0.4").unwrap();
        // 0, 0.4, 0.8; the next point 1.2 overshoots 0.9 by more than 0.2.
        assert_eq!(g.points().len(), 3);
        let g = Grid::parse("0..1.1:0.4").unwrap();
        // 1.2 overshoots 1.1 by less than half a step and is kept.
        assert_eq!(g.points().len(), 4);
    }

    #[test]
    fn malformed_grids_are_rejected() {
        assert!(Grid::parse("1..0:0.5").is_err());
        assert!(Grid::parse("0..1:0").is_err());
        assert!(Grid::parse("0..1:-1").is_err());
        assert!(Grid::parse("a..b:1").is_err());
        assert!(Grid::parse("0..inf:1").is_err());
    }
}
