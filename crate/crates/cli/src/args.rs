//! Value parsers for numeric flags. All accept scientific notation; integer
//! flags reject values that are not exact integers instead of rounding.

/// Largest integer every `f64` below it represents exactly.
const EXACT_LIMIT: f64 = 9_007_199_254_740_992.0;

fn parse_float(s: &str) -> Result<f64, String> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| format!("`{s}` is not a number"))
}

fn integral(s: &str) -> Result<f64, String> {
    let v = parse_float(s)?;
    if !v.is_finite() || v.fract() != 0.0 {
        return Err(format!("`{s}` is not an integer"));
    }
    if v.abs() > EXACT_LIMIT {
        return Err(format!("`{s}` is too large to represent exactly"));
    }
    Ok(v)
}

pub fn unsigned(s: &str) -> Result<u64, String> {
    if let Ok(v) = s.trim().parse::<u64>() {
        return Ok(v);
    }
    let v = integral(s)?;
    if v < 0.0 {
        return Err(format!("`{s}` is negative"));
    }
    Ok(v as u64)
}

pub fn signed(s: &str) -> Result<i64, String> {
    if let Ok(v) = s.trim().parse::<i64>() {
        return Ok(v);
    }
    integral(s).map(|v| v as i64)
}

pub fn finite(s: &str) -> Result<f64, String> {
    let v = parse_float(s)?;
    if !v.is_finite() {
        return Err(format!("`{s}` is not finite"));
    }
    Ok(v)
}

pub fn positive_count(s: &str) -> Result<usize, String> {
    let v = unsigned(s)?;
    if v == 0 {
        return Err("must be at least 1".into());
    }
    usize::try_from(v).map_err(|_| format!("`{s}` is too large"))
}
