//! SVG card diagrams.
//!
//! Levels are drawn bottom to top. Each card is a `<g class="card">` with one
//! polyline per ball, and the crossing count goes into `<metadata>`.

use std::fmt::Write as _;

use crate::cards::{crossings, throw_pattern, CardSequence};
use crate::error::{Error, Result};

const PALETTE: [&str; 8] = [
    "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

/// Layout of a rendered sequence, in pixels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub card_width: u32,
    /// Extra height above the top level and below the bottom one.
    pub card_padding: u32,
    pub level_spacing: u32,
    /// Ball numbers at both ends of the strip.
    pub ball_labels: bool,
    /// The balls thrown, under each card.
    pub thrown_labels: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        Self {
            card_width: 60,
            card_padding: 15,
            level_spacing: 30,
            ball_labels: true,
            thrown_labels: true,
        }
    }
}

impl RenderSpec {
    pub fn validate(&self) -> Result<()> {
        if self.card_width == 0 || self.level_spacing == 0 {
            return Err(Error::InvalidInput(
                "card width and level spacing must be positive".into(),
            ));
        }
        Ok(())
    }
}

const MARGIN: u32 = 30;
const LABEL_BAND: u32 = 24;

pub fn render_svg(seq: &CardSequence, spec: &RenderSpec) -> Result<String> {
    spec.validate()?;
    let b = seq.b() as u32;
    let n = seq.len() as u32;
    let card_h = (b - 1) * spec.level_spacing + 2 * spec.card_padding;
    let width = 2 * MARGIN + n * spec.card_width;
    let height = 2 * MARGIN + card_h + if spec.thrown_labels { LABEL_BAND } else { 0 };
    let y_of = |level: usize| MARGIN + spec.card_padding + (b - level as u32) * spec.level_spacing;
    let pattern = throw_pattern(seq);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"<metadata>{{"b":{b},"cards":"{seq}","crossings":{}}}</metadata>"#,
        crossings(seq)
    );
    let _ = writeln!(out, r#"<rect width="{width}" height="{height}" fill="white"/>"#);

    let mut arr: Vec<usize> = (1..=seq.b()).collect();
    for (i, card) in seq.cards().iter().enumerate() {
        let x0 = MARGIN + i as u32 * spec.card_width;
        let x1 = x0 + spec.card_width;
        let xm = x0 + spec.card_width / 2;
        let _ = writeln!(out, r#"<g class="card" id="card-{}">"#, i + 1);
        let _ = writeln!(
            out,
            r##"<rect x="{x0}" y="{}" width="{}" height="{card_h}" fill="none" stroke="#888"/>"##,
            MARGIN, spec.card_width
        );
        let perm = card.permutation();
        for level in 1..=seq.b() {
            let ball = arr[level - 1];
            let to = perm.apply(level);
            let (ya, yb) = (y_of(level), y_of(to));
            let _ = writeln!(
                out,
                r#"<polyline class="track" data-ball="{ball}" points="{x0},{ya} {xm},{} {x1},{yb}" fill="none" stroke="{}" stroke-width="2"/>"#,
                (ya + yb) / 2,
                PALETTE[(ball - 1) % PALETTE.len()]
            );
        }
        if spec.thrown_labels {
            let thrown: Vec<String> = pattern.throws()[i].iter().map(usize::to_string).collect();
            let _ = writeln!(
                out,
                r#"<text class="thrown" x="{xm}" y="{}" text-anchor="middle" font-size="14">{}</text>"#,
                MARGIN + card_h + 18,
                thrown.join(",")
            );
        }
        out.push_str("</g>\n");
        arr = card.apply(&arr);
    }

    if spec.ball_labels {
        let right = MARGIN + n * spec.card_width;
        for level in 1..=seq.b() {
            let y = y_of(level) + 5;
            let _ = writeln!(
                out,
                r#"<text class="ball" x="{}" y="{y}" text-anchor="end" font-size="12">{level}</text>"#,
                MARGIN - 6
            );
            let _ = writeln!(
                out,
                r#"<text class="ball" x="{}" y="{y}" font-size="12">{}</text>"#,
                right + 6,
                arr[level - 1]
            );
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_card_has_parallel_tracks() {
        let seq: CardSequence = CardSequence::parse("C1", Some(3)).unwrap();
        let svg = render_svg(&seq, &RenderSpec::default()).unwrap();
        assert!(svg.contains(r#""crossings":0"#));
        assert_eq!(svg.matches("<polyline").count(), 3);
        assert_eq!(svg.matches(r#"class="card""#).count(), 1);
    }

    #[test]
    fn deterministic_and_labelled() {
        let seq: CardSequence = "C3 C3 C2 C4 C3 C4 C3 C2 C2".parse().unwrap();
        let spec = RenderSpec::default();
        let a = render_svg(&seq, &spec).unwrap();
        assert_eq!(a, render_svg(&seq, &spec).unwrap());
        let labels: Vec<&str> = a
            .lines()
            .filter(|l| l.contains(r#"class="thrown""#))
            .map(|l| l.split('>').nth(1).unwrap().split('<').next().unwrap())
            .collect();
        assert_eq!(labels, ["1", "2", "3", "1", "3", "2", "4", "3", "1"]);
        assert!(a.contains(r#""crossings":17"#));
    }

    #[test]
    fn zero_width_rejected() {
        let seq: CardSequence = "C1".parse().unwrap();
        let spec = RenderSpec {
            card_width: 0,
            ..RenderSpec::default()
        };
        assert!(render_svg(&seq, &spec).is_err());
    }
}
