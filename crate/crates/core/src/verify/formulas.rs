//! Closed-form values and bounds, as functions of the order `n`.

fn ceil_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// `ι_g(C_n)` for `n >= 4`.
pub fn cycle_d(n: usize) -> i64 {
    let n = n as i64;
    if n % 5 == 0 {
        2 * ceil_div(n, 5)
    } else {
        2 * ceil_div(n, 5) - 1
    }
}

/// `ι_g'(C_n)` for `n >= 4`.
pub fn cycle_s(n: usize) -> i64 {
    let n = n as i64;
    if n % 5 == 4 {
        2 * floor_div(n, 5) + 1
    } else {
        2 * floor_div(n, 5)
    }
}

/// `ι_g(P_n)` for `n >= 1`.
pub fn path_d(n: usize) -> i64 {
    let n = n as i64;
    floor_div(2 * n + 1, 5) - i64::from(n % 5 == 0)
}

/// `ι_g'(P_n)` for `n >= 1`.
pub fn path_s(n: usize) -> i64 {
    floor_div(2 * n as i64 + 2, 5)
}

/// Lower end of the earlier path bracket, `⌈2n/5⌉ - 1`, valid for `n >= 6`.
pub fn bracket_lo(n: usize) -> i64 {
    ceil_div(2 * n as i64, 5) - 1
}

/// Upper end of the earlier path bracket, `⌊(2n+2)/5⌋`, valid for `n >= 6`.
pub fn bracket_hi(n: usize) -> i64 {
    floor_div(2 * n as i64 + 2, 5)
}

/// Lower bound forced by the run-extending Staller in the D-game on `C_n`.
pub fn claim_a_d(n: usize) -> i64 {
    let n = n as i64;
    (2 * ceil_div(n, 5)).min(2 * ceil_div(n - 4, 5) + 1)
}

/// Lower bound forced by the run-extending Staller in the S-game on `C_n`.
pub fn claim_a_s(n: usize) -> i64 {
    let n = n as i64;
    (2 * ceil_div(n - 3, 5)).min(2 * ceil_div(n - 4, 5) + 1)
}

/// Lower bound forced by the run-extending Staller in the S-game on `P_n`.
pub fn path_s_lower(n: usize) -> i64 {
    let n = n as i64;
    (2 * ceil_div(n - 2, 5)).min(2 * ceil_div(n - 3, 5) + 1)
}

/// Upper bound for the window Dominator in the D-game on `P_n`, defined
/// when `n ≡ 0, 4 (mod 5)`.
pub fn path_window(n: usize) -> Option<i64> {
    matches!(n % 5, 0 | 4).then(|| ceil_div(2 * n as i64, 5) - 1)
}

pub fn half(n: usize) -> i64 {
    n as i64 / 2
}

/// `⌊5n/11⌋`.
pub fn five_elevenths(n: usize) -> i64 {
    floor_div(5 * n as i64, 11)
}

/// `⌈3n/7⌉`.
pub fn three_sevenths_ceil(n: usize) -> i64 {
    ceil_div(3 * n as i64, 7)
}

/// `⌊3n/7⌋`, the largest integer not exceeding `3n/7`.
pub fn three_sevenths_floor(n: usize) -> i64 {
    floor_div(3 * n as i64, 7)
}

/// Evaluates a formula by name.
pub fn by_name(name: &str, n: usize) -> Option<i64> {
    Some(match name {
        "cycle_d" => cycle_d(n),
        "cycle_s" => cycle_s(n),
        "path_d" => path_d(n),
        "path_s" => path_s(n),
        "bracket_lo" => bracket_lo(n),
        "bracket_hi" => bracket_hi(n),
        "claim_a_d" => claim_a_d(n),
        "claim_a_s" => claim_a_s(n),
        "path_s_lower" => path_s_lower(n),
        "path_window" => path_window(n)?,
        "half" => half(n),
        "five_elevenths" => five_elevenths(n),
        "three_sevenths_ceil" => three_sevenths_ceil(n),
        "three_sevenths_floor" => three_sevenths_floor(n),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_examples() {
        assert_eq!((cycle_d(10), cycle_s(10)), (4, 4));
        assert_eq!((cycle_d(7), cycle_s(7)), (3, 2));
        assert_eq!((cycle_d(4), cycle_s(4)), (1, 1));
        assert_eq!(cycle_s(9), 3);
    }

    #[test]
    fn path_examples() {
        assert_eq!((path_d(5), path_s(5)), (1, 2));
        assert_eq!((path_d(7), path_s(7)), (3, 3));
        assert_eq!((path_d(10), path_s(10)), (3, 4));
        assert_eq!(path_d(3), 1);
    }

    #[test]
    fn claims_meet_the_cycle_values() {
        for n in 6..=40 {
            assert_eq!(claim_a_d(n), cycle_d(n));
            assert_eq!(claim_a_s(n), cycle_s(n));
        }
        for n in (6..=40).filter(|n| matches!(n % 5, 0 | 4)) {
            assert_eq!(path_window(n), Some(path_d(n)));
            assert_eq!(path_s_lower(n), path_s(n));
        }
    }

    #[test]
    fn bounds() {
        assert_eq!(five_elevenths(7), 3);
        assert_eq!(three_sevenths_ceil(6), 3);
        assert_eq!(three_sevenths_ceil(14), 6);
        assert_eq!(three_sevenths_floor(21), 9);
        assert_eq!(by_name("path_window", 7), None);
        assert_eq!(by_name("nope", 7), None);
    }
}
