//! Interactive guard game: the user attacks, the extracted strategy
//! answers. One vertex index per input line.

use std::io::{BufRead, Write};

use anyhow::Result;
use edom_core::eternal::{eternal_number, extract_strategy, safe_family_with, Limits, Model};
use edom_core::params::domination_number;
use edom_core::Graph;

use crate::usage;

fn number_name(model: Model) -> &'static str {
    match model {
        Model::OneGuard => "gamma_inf",
        Model::AllGuards => "gamma_m_inf",
    }
}

/// Runs a session; returns the exit code (1 when the defence is refused).
pub fn session(
    g: &Graph,
    k: Option<usize>,
    model: Model,
    limits: &Limits,
    input: &mut impl BufRead,
    out: &mut impl Write,
) -> Result<u8> {
    if g.n() == 0 {
        return Err(usage("the graph has no vertices"));
    }
    let family = match k {
        None => eternal_number(g, model, limits)?.1,
        Some(k) if k == 0 || k > g.n() => {
            return Err(usage(format!("--k must be between 1 and {}", g.n())));
        }
        Some(k) => safe_family_with(g, k, model, limits)?,
    };
    let k = family.k;
    if family.is_empty() {
        writeln!(out, "refused: {k} guard(s) cannot defend this graph forever ({model} model)")?;
        write!(out, "  gamma = {}", domination_number(g).0)?;
        match eternal_number(g, model, limits) {
            Ok((value, _)) => writeln!(out, ", {} = {value}", number_name(model))?,
            Err(_) => writeln!(out)?,
        }
        match family.first_removal {
            _ if family.initial == 0 => writeln!(out, "  no dominating set has {k} vertices")?,
            Some((d, r)) => writeln!(out, "  first undefendable pattern: guards at {d}, attack at {r}")?,
            None => {}
        }
        return Ok(1);
    }
    let strategy = extract_strategy(g, &family)?;
    writeln!(out, "{k} guard(s), {model} model, vertices 0..{}; enter a vertex to attack, q to quit", g.n() - 1)?;
    let mut guards = strategy.start;
    writeln!(out, "guards at {guards}")?;
    let mut line = String::new();
    loop {
        write!(out, "attack> ")?;
        out.flush()?;
        line.clear();
        if input.read_line(&mut line)? == 0 {
            writeln!(out)?;
            return Ok(0);
        }
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        if text == "q" || text == "quit" {
            return Ok(0);
        }
        let Ok(r) = text.parse::<usize>() else {
            writeln!(out, "not a vertex: {text:?}")?;
            continue;
        };
        if r >= g.n() {
            writeln!(out, "no vertex {r}; vertices are 0..{}", g.n() - 1)?;
            continue;
        }
        if guards.contains(r) {
            writeln!(out, "vertex {r} is guarded; attack an unguarded vertex")?;
            continue;
        }
        let next = strategy.respond(guards, r).expect("the strategy answers every attack on a member");
        if model == Model::OneGuard {
            let from = guards.difference(next).first().expect("one guard moves");
            writeln!(out, "guard {from} -> {r}")?;
        }
        guards = next;
        writeln!(out, "guards at {guards}")?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use edom_core::families::{complete, cycle};
    use edom_core::VertexSet;

    fn run(g: &Graph, k: Option<usize>, model: Model, attacks: &str) -> (u8, String) {
        let mut out = Vec::new();
        let code = session(g, k, model, &Limits::default(), &mut attacks.as_bytes(), &mut out).unwrap();
        (code, String::from_utf8(out).unwrap())
    }

    fn configurations(transcript: &str) -> Vec<VertexSet> {
        transcript
            .lines()
            .filter_map(|l| l.split("guards at ").nth(1))
            .map(|s| {
                let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
                inner.split(',').filter(|t| !t.is_empty()).map(|t| t.parse::<usize>().unwrap()).collect()
            })
            .collect()
    }

    #[test]
    fn cycle_six_is_defended_by_two() {
        let g = cycle(6).unwrap();
        let attacks: String = (0..60).map(|i| format!("{}\n", (i * 7 + 1) % 6)).collect();
        let (code, text) = run(&g, Some(2), Model::AllGuards, &attacks);
        assert_eq!(code, 0);
        let configs = configurations(&text);
        assert!(configs.len() > 30);
        assert!(configs.iter().all(|&d| d.len() == 2 && g.is_dominating(d)));
        // same attacks, same transcript
        assert_eq!(run(&g, Some(2), Model::AllGuards, &attacks).1, text);
    }

    #[test]
    fn cycle_five_with_two_is_refused() {
        let (code, text) = run(&cycle(5).unwrap(), Some(2), Model::OneGuard, "");
        assert_eq!(code, 1);
        assert!(text.starts_with("refused"));
        assert!(text.contains("gamma = 2, gamma_inf = 3"));
        assert!(text.contains("first undefendable pattern"));
    }

    #[test]
    fn triangle_guard_follows_the_attack() {
        let (code, text) = run(&complete(3).unwrap(), None, Model::OneGuard, "2\n");
        assert_eq!(code, 0);
        assert!(text.contains("guards at {0}") && text.contains("guard 0 -> 2") && text.contains("guards at {2}"));
    }

    #[test]
    fn bad_input_reprompts() {
        let (code, text) = run(&cycle(4).unwrap(), Some(2), Model::AllGuards, "x\n9\n0\n\nq\n3\n");
        assert_eq!(code, 0);
        assert!(text.contains("not a vertex: \"x\""));
        assert!(text.contains("no vertex 9"));
        assert!(text.contains("vertex 0 is guarded"));
        assert_eq!(configurations(&text).len(), 1, "quit stops before the last attack");
    }
}
