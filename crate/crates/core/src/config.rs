/// Resource limits for the exhaustive computations.
///
/// Every enumeration checks its projected size against these limits before it
/// starts and fails with a budget error instead of truncating.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Budget {
    /// Largest vertex count accepted by the enumeration entry points (at most 64).
    pub max_vertices: usize,
    /// Largest automorphism group that will be materialized or walked.
    pub max_aut: u64,
    /// Largest number of candidate colorings a single count may visit.
    pub max_colorings: u64,
    /// Run data-parallel loops on the rayon pool (ignored without the `parallel` feature).
    pub parallel: bool,
}

pub const HARD_VERTEX_LIMIT: usize = 64;

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_vertices: HARD_VERTEX_LIMIT,
            max_aut: 10_000_000,
            max_colorings: 10_000_000,
            parallel: true,
        }
    }
}

impl Budget {
    pub fn sequential(mut self) -> Self {
        self.parallel = false;
        self
    }

    /// Defaults overridden by `DISTINGUISH_MAX_VERTICES`, `DISTINGUISH_MAX_AUT`
    /// and `DISTINGUISH_MAX_COLORINGS` when set.
    pub fn from_env() -> Self {
        let mut b = Budget::default();
        if let Some(v) = env_u64("DISTINGUISH_MAX_VERTICES") {
            b.max_vertices = (v as usize).min(HARD_VERTEX_LIMIT);
        }
        if let Some(v) = env_u64("DISTINGUISH_MAX_AUT") {
            b.max_aut = v;
        }
        if let Some(v) = env_u64("DISTINGUISH_MAX_COLORINGS") {
            b.max_colorings = v;
        }
        b
    }
}

fn env_u64(key: &str) -> Option<u64> {
    let raw = std::env::var(key).ok()?;
    parse_count(&raw)
}

/// Parses `12345`, `1_000_000`, `1e7` or `10^7`.
pub fn parse_count(raw: &str) -> Option<u64> {
    let s: String = raw.trim().chars().filter(|c| *c != '_').collect();
    if let Some((base, exp)) = s.split_once('^') {
        return base.parse::<u64>().ok()?.checked_pow(exp.parse().ok()?);
    }
    if let Some((mant, exp)) = s.split_once(['e', 'E']) {
        return mant.parse::<u64>().ok()?.checked_mul(10u64.checked_pow(exp.parse().ok()?)?);
    }
    s.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn count_syntax() {
        assert_eq!(parse_count("10^7"), Some(10_000_000));
        assert_eq!(parse_count("1e3"), Some(1000));
        assert_eq!(parse_count("1_000"), Some(1000));
        assert_eq!(parse_count("x"), None);
    }
}
