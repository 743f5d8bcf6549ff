//! Number formatting shared by every command.

/// Significant digits in printed numbers.
const DIGITS: i32 = 12;

/// `x` with 12 significant digits; 0 prints as `0.000000000000`. Very large
/// or small magnitudes switch to exponent form.
pub fn num(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return format!("{:.*}", DIGITS as usize, 0.0);
    }
    let e = x.abs().log10().floor() as i32;
    if !(-5..DIGITS).contains(&e) {
        return format!("{:.*e}", (DIGITS - 1) as usize, x);
    }
    let text = format!("{:.*}", (DIGITS - 1 - e).max(0) as usize, x);
    // Rounding can carry into a new leading digit, e.g. 9.99... -> 10.0.
    if significant(&text) > DIGITS as usize {
        return format!("{:.*}", (DIGITS - 2 - e).max(0) as usize, x);
    }
    text
}

fn significant(text: &str) -> usize {
    text.bytes()
        .filter(u8::is_ascii_digit)
        .skip_while(|&b| b == b'0')
        .count()
}

pub fn coords(p: &[f64]) -> String {
    p.iter().map(|&v| num(v)).collect::<Vec<_>>().join(" ")
}

pub fn csv_row(values: &[f64]) -> String {
    values.iter().map(|&v| num(v)).collect::<Vec<_>>().join(",")
}

/// Header `x,y,...` for coordinates of the given dimension.
pub fn axis_names(dim: usize) -> Vec<String> {
    const NAMES: [&str; 3] = ["x", "y", "z"];
    (0..dim)
        .map(|i| {
            NAMES
                .get(i)
                .map_or_else(|| format!("x{i}"), |s| s.to_string())
        })
        .collect()
}
