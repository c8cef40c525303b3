//! Axis range and angle parsing for the command line.

use std::f64::consts::PI;

/// Inclusive linear axis given as `start:stop:count`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridAxis {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl GridAxis {
    /// Grid values with exact endpoints; the two-sided form keeps symmetric
    /// ranges exactly sign-symmetric in floating point.
    pub fn values(&self) -> Vec<f64> {
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| (self.start * (last - i as f64) + self.stop * i as f64) / last)
            .collect()
    }
}

/// Parses `start:stop:count` with count ≥ 2 and start < stop.
pub fn parse_range(s: &str) -> Result<GridAxis, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("expected start:stop:count, got '{s}'"));
    }
    let start: f64 = parts[0]
        .parse()
        .map_err(|_| format!("bad range start '{}'", parts[0]))?;
    let stop: f64 = parts[1]
        .parse()
        .map_err(|_| format!("bad range stop '{}'", parts[1]))?;
    let count: usize = parts[2]
        .parse()
        .map_err(|_| format!("bad range count '{}'", parts[2]))?;
    if !start.is_finite() || !stop.is_finite() {
        return Err(format!("range endpoints must be finite, got '{s}'"));
    }
    if count < 2 {
        return Err(format!("range count must be at least 2, got {count}"));
    }
    if start >= stop {
        return Err(format!("range start must be below stop, got '{s}'"));
    }
    Ok(GridAxis { start, stop, count })
}

/// Parses an angle in radians, either as a plain float or in `pi` notation
/// such as `pi`, `pi/4`, `3pi/4`, or `-pi/2`.
pub fn parse_theta(s: &str) -> Result<f64, String> {
    let t = s.trim();
    if let Ok(v) = t.parse::<f64>() {
        if !v.is_finite() {
            return Err(format!("angle must be finite, got '{s}'"));
        }
        return Ok(v);
    }
    let lower = t.to_ascii_lowercase();
    if let Some(ix) = lower.find("pi") {
        let pre = &lower[..ix];
        let post = &lower[ix + 2..];
        let coef = match pre {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other
                .parse::<f64>()
                .map_err(|_| format!("bad angle coefficient '{other}'"))?,
        };
        let divisor = if post.is_empty() {
            1.0
        } else if let Some(d) = post.strip_prefix('/') {
            let v: f64 = d
                .parse()
                .map_err(|_| format!("bad angle divisor '{d}'"))?;
            if v == 0.0 {
                return Err("angle divisor must be nonzero".to_string());
            }
            v
        } else {
            return Err(format!("cannot parse angle '{s}'"));
        };
        let v = coef * PI / divisor;
        if !v.is_finite() {
            return Err(format!("angle must be finite, got '{s}'"));
        }
        return Ok(v);
    }
    Err(format!("cannot parse angle '{s}'"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    #[test]
    fn range_parses_and_hits_endpoints() {
        let axis = parse_range("-3:3:121").unwrap();
        let vals = axis.values();
        assert_eq!(vals.len(), 121);
        assert_eq!(vals[0], -3.0);
        assert_eq!(vals[120], 3.0);
        assert_eq!(vals[60], 0.0);
    }

    #[test]
    fn range_values_are_sign_symmetric() {
        let vals = parse_range("-1.5:1.5:37").unwrap().values();
        for i in 0..vals.len() {
            assert_eq!(vals[i], -vals[vals.len() - 1 - i]);
        }
    }

    #[test]
    fn range_rejects_malformed_inputs() {
        for bad in ["1:2", "1:2:3:4", "a:2:3", "1:b:3", "1:2:c", "2:1:5", "1:1:5", "0:1:1"] {
            assert!(parse_range(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn theta_accepts_pi_notation() {
        assert_eq!(parse_theta("pi/4").unwrap(), FRAC_PI_4);
        assert_eq!(parse_theta("pi/2").unwrap(), FRAC_PI_2);
        assert_eq!(parse_theta("pi").unwrap(), PI);
        assert_eq!(parse_theta("2pi").unwrap(), 2.0 * PI);
        assert_eq!(parse_theta("3pi/4").unwrap(), 3.0 * PI / 4.0);
        assert_eq!(parse_theta("-pi/2").unwrap(), -FRAC_PI_2);
        assert_eq!(parse_theta("0.5").unwrap(), 0.5);
        assert_eq!(parse_theta(" PI/4 ").unwrap(), FRAC_PI_4);
    }

    #[test]
    fn theta_rejects_malformed_inputs() {
        for bad in ["", "piover4", "pi/0", "xpi", "pi/", "nan"] {
            assert!(parse_theta(bad).is_err(), "{bad}");
        }
    }
}
