//! CSV and SVG emitters. Numbers are written with 10 significant digits.

use std::fmt::Write;

use super::curves::Polyline;
use super::DiagramRecord;

/// `printf("%.10g")`: 10 significant digits, trailing zeros removed,
/// exponent form outside `1e-4 <= |v| < 1e10`.
pub fn fmt_g10(v: f64) -> String {
    if v == 0.0 {
        return if v.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".into()
        } else if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let e = format!("{:.9e}", v);
    let (mant, exp) = e.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent digits");
    if (-4..10).contains(&exp) {
        let decimals = (9 - exp).max(0) as usize;
        trim(format!("{:.*}", decimals, v))
    } else {
        let m = trim(mant.to_string());
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    }
}

fn trim(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub const CSV_HEADER: &str = "body_id,family,mode,r,R,D,w,x,y";

pub fn to_csv(records: &[DiagramRecord]) -> String {
    let mut s = String::with_capacity(64 * (records.len() + 1));
    s.push_str(CSV_HEADER);
    s.push('\n');
    for r in records {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{}",
            r.body_id,
            r.family,
            r.mode,
            fmt_g10(r.r),
            fmt_g10(r.big_r),
            fmt_g10(r.d),
            fmt_g10(r.w),
            fmt_g10(r.x),
            fmt_g10(r.y)
        );
    }
    s
}

const SIZE: f64 = 800.0;
const PAD: f64 = 60.0;

/// Scatter of the records over the boundary polylines.
pub fn to_svg(records: &[DiagramRecord], curves: &[Polyline], title: &str) -> String {
    let ymax = records
        .iter()
        .map(|r| r.y)
        .chain(curves.iter().flat_map(|c| c.points.iter().map(|p| p.1)))
        .fold(1.0f64, f64::max)
        * 1.05;
    let xmax = 1.05;
    let w = SIZE - 2.0 * PAD;
    let px = |x: f64| PAD + w * x / xmax;
    let py = |y: f64| SIZE - PAD - w * y / ymax;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="0 0 800 800">"#
    );
    let _ = writeln!(s, r#"<rect width="800" height="800" fill="white"/>"#);
    let _ = writeln!(s, r#"<text x="400" y="30" text-anchor="middle" font-size="18">{}</text>"#, escape(title));
    // axes
    let _ = writeln!(
        s,
        r#"<path d="M {} {} L {} {} L {} {}" stroke="black" fill="none"/>"#,
        fmt_g10(px(0.0)),
        fmt_g10(py(ymax)),
        fmt_g10(px(0.0)),
        fmt_g10(py(0.0)),
        fmt_g10(px(xmax)),
        fmt_g10(py(0.0))
    );
    for i in 0..=10 {
        let x = i as f64 / 10.0;
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="middle" font-size="11">{}</text>"#,
            fmt_g10(px(x)),
            fmt_g10(py(0.0) + 16.0),
            fmt_g10(x)
        );
    }
    let mut y = 0.0;
    while y <= ymax + 1e-12 {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="end" font-size="11">{}</text>"#,
            fmt_g10(px(0.0) - 6.0),
            fmt_g10(py(y) + 4.0),
            fmt_g10((y * 100.0).round() / 100.0)
        );
        y += 0.25;
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle" font-size="14">r/R</text>"#,
        fmt_g10(px(xmax / 2.0)),
        fmt_g10(SIZE - 15.0)
    );
    let _ = writeln!(
        s,
        r#"<text x="20" y="{}" text-anchor="middle" font-size="14" transform="rotate(-90 20 {})">D/2R</text>"#,
        fmt_g10(SIZE / 2.0),
        fmt_g10(SIZE / 2.0)
    );
    for c in curves {
        let mut d = String::new();
        for (i, &(x, y)) in c.points.iter().enumerate() {
            let _ = write!(d, "{}{} {} ", if i == 0 { "M " } else { "L " }, fmt_g10(px(x)), fmt_g10(py(y)));
        }
        let dash = if c.conjectured { r#" stroke-dasharray="6 4""# } else { "" };
        let _ = writeln!(
            s,
            r#"<path d="{}" stroke="crimson" stroke-width="2" fill="none"{}><title>{}{}</title></path>"#,
            d.trim_end(),
            dash,
            escape(&c.label),
            if c.conjectured { " (CONJECTURED)" } else { "" }
        );
    }
    if curves.iter().any(|c| c.conjectured) {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="50" text-anchor="end" font-size="12">dashed: CONJECTURED</text>"#,
            fmt_g10(SIZE - PAD)
        );
    }
    for r in records {
        let _ = writeln!(
            s,
            r#"<circle cx="{}" cy="{}" r="2" fill="steelblue" fill-opacity="0.6"/>"#,
            fmt_g10(px(r.x)),
            fmt_g10(py(r.y))
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g10_matches_printf() {
        let cases = [
            (1.0, "1"),
            (0.5, "0.5"),
            (1.0 / 3.0, "0.3333333333"),
            (2.0 / 3.0, "0.6666666667"),
            (123456.789, "123456.789"),
            (1e-5, "1e-05"),
            (1.5e-5, "1.5e-05"),
            (12345678901.0, "1.23456789e+10"),
            (9999999999.5, "1e+10"),
            (-0.25, "-0.25"),
            (0.0001, "0.0001"),
            (1.3660254037844386, "1.366025404"),
        ];
        for (v, want) in cases {
            assert_eq!(fmt_g10(v), want, "{v}");
        }
    }
}
