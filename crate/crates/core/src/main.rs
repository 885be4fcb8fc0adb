use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use graphene::algebra::{weyl_orbit, AlgebraId, WeightVector};
use graphene::colouring::{
    apply_transition, colour_patch, enumerate_colourings, transition_group, ColourScheme, TransitionElement,
};
use graphene::exact::{fmt_coords, parse_rational, parse_rational_list, Rational};
use graphene::graphene::{build, build_by_congruence, Method};
use graphene::io::json::{orbit_json, tables_json};
use graphene::io::{parse_document, render_document, to_json, Document, PointSet, RenderSpec};
use graphene::projection::{compose_chain, lowest_orbit, project_orbit, projection_matrix, ProjectionChain};
use graphene::refinement::{proximity_refinement_report, refine_lattice, refined_graphene};
use graphene::verify::verify_all;
use graphene::{algebra, Error};

#[derive(Parser)]
#[command(name = "graphene", version, about = "Exact honeycomb lattices from Lie algebra weight systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan matrices, their inverses and Gram matrices of every algebra.
    Tables {
        #[arg(long)]
        json: bool,
    },
    /// Weyl orbit of a dominant weight, e.g. `orbit G2 0,1`.
    Orbit {
        algebra: AlgebraId,
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        json: bool,
    },
    /// Projects the hexagonal orbit of `source` down to `--target` (default A2).
    Project {
        source: AlgebraId,
        #[arg(long, default_value = "A2")]
        target: AlgebraId,
        /// Intermediate algebras, comma separated, e.g. `--chain G2`.
        #[arg(long, value_delimiter = ',')]
        chain: Vec<AlgebraId>,
        #[arg(long)]
        show_matrix: bool,
        #[arg(long)]
        json: bool,
    },
    /// Builds a graphene patch by one of the construction routes.
    Build {
        method: Method,
        #[arg(long, value_parser = rational)]
        radius: Rational,
        #[arg(long)]
        json: bool,
    },
    /// Colours the hexagons of a congruence patch mod m.
    Colour {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        k1: Option<i64>,
        #[arg(long)]
        k2: Option<i64>,
        #[arg(long, default_value = "6", value_parser = rational)]
        radius: Rational,
        #[arg(long)]
        json: bool,
    },
    /// A phase-transition element, optionally applied to a colouring type.
    Transition {
        #[arg(long, default_value_t = 3)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        l1: i64,
        #[arg(long, allow_hyphen_values = true)]
        l2: i64,
        #[arg(long)]
        k1: Option<i64>,
        #[arg(long)]
        k2: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// The transition group mod m and its axioms.
    Group {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        table: bool,
        #[arg(long)]
        json: bool,
    },
    /// The refined lattice (1/M)P, or its graphene with `--graphene`.
    Refine {
        #[arg(long = "M")]
        level: i64,
        #[arg(long, value_parser = rational)]
        radius: Rational,
        #[arg(long)]
        graphene: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exact facts about the proximity cells of the honeycomb vertices.
    ProximityReport {
        #[arg(long, value_parser = rational)]
        radius: Rational,
        #[arg(long)]
        json: bool,
    },
    /// Runs every construction identity; exit status 1 on any failure.
    Verify {
        #[arg(long, default_value = "10", value_parser = rational)]
        radius: Rational,
        #[arg(long)]
        json: bool,
    },
    /// Renders a patch, coloured patch or point-set document as SVG.
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        hide_classes: bool,
        #[arg(long)]
        json: bool,
    },
}

fn rational(s: &str) -> Result<Rational, Error> {
    parse_rational(s)
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit_json(out: &mut String, value: &impl serde::Serialize) {
    out.push_str(&to_json(value));
}

fn run(command: Command) -> Result<String, Failure> {
    let mut out = String::new();
    match command {
        Command::Tables { json } => {
            if json {
                emit_json(&mut out, &tables_json());
            } else {
                for id in AlgebraId::ALL {
                    let t = algebra::table(id);
                    out.push_str(&format!("{id} (rank {})\n  cartan {:?}\n  gram  ", t.rank, t.cartan));
                    let rows: Vec<String> = t.gram.iter().map(|r| fmt_coords(r)).collect();
                    out.push_str(&rows.join(" "));
                    out.push('\n');
                }
            }
        }
        Command::Orbit { algebra, weight, json } => {
            let w = WeightVector::new(algebra, parse_rational_list(&weight)?)?;
            let orbit = weyl_orbit(&w)?;
            if json {
                emit_json(&mut out, &orbit_json(&orbit));
            } else {
                out.push_str(&format!("{algebra} orbit of {w}: {} weights\n", orbit.len()));
                for e in &orbit.elements {
                    out.push_str(&format!("  {e}\n"));
                }
            }
        }
        Command::Project { source, target, chain, show_matrix, json } => {
            let mut path = vec![source];
            path.extend(chain);
            path.push(target);
            let pr = if path.len() == 2 {
                projection_matrix(source, target)?
            } else {
                compose_chain(&ProjectionChain::through(&path)?)?
            };
            let orbit = lowest_orbit(source)
                .ok_or_else(|| Failure::Usage(format!("no hexagonal orbit stored for {source}")))?;
            let image = project_orbit(&pr, &orbit)?;
            if json {
                let pairs: Vec<_> =
                    orbit.elements.iter().zip(&image).map(|(a, b)| [a.to_string(), b.to_string()]).collect();
                let value = serde_json::json!({
                    "path": path.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "matrix": if show_matrix { Some(&pr.entries) } else { None },
                    "images": pairs,
                });
                emit_json(&mut out, &value);
            } else {
                if show_matrix {
                    out.push_str(&pr.to_string());
                }
                for (a, b) in orbit.elements.iter().zip(&image) {
                    out.push_str(&format!("{a} -> {b}\n"));
                }
            }
        }
        Command::Build { method, radius, json } => {
            let patch = build(method, radius)?;
            if json {
                out.push_str(&Document::Patch(patch).to_json());
            } else {
                out.push_str(&format!(
                    "{method}: radius {radius}, {} vertices, {} hexagons\n",
                    patch.vertices.len(),
                    patch.hexagons.len()
                ));
                for line in &patch.provenance {
                    out.push_str(&format!("  {line}\n"));
                }
            }
        }
        Command::Colour { m, k1, k2, radius, json } => match (k1, k2) {
            (Some(k1), Some(k2)) => {
                let scheme = ColourScheme::new(m, k1, k2)?;
                let coloured = colour_patch(&build_by_congruence(radius, 0)?, &scheme)?;
                if json {
                    out.push_str(&Document::Coloured(coloured).to_json());
                } else {
                    out.push_str(&format!("m={} type ({},{})\n", scheme.m, scheme.k1, scheme.k2));
                    for (h, c) in coloured.patch.hexagons.iter().zip(&coloured.colours) {
                        out.push_str(&format!("  {} -> {c}\n", h.center));
                    }
                }
            }
            (None, None) => {
                let schemes = enumerate_colourings(m)?;
                if json {
                    emit_json(&mut out, &schemes);
                } else {
                    for s in schemes {
                        out.push_str(&format!("({},{})\n", s.k1, s.k2));
                    }
                }
            }
            _ => return Err(Failure::Usage("give both --k1 and --k2, or neither".into())),
        },
        Command::Transition { m, l1, l2, k1, k2, json } => {
            let t = TransitionElement::new(m, l1, l2)?;
            let applied = match (k1, k2) {
                (Some(k1), Some(k2)) => Some(apply_transition(&ColourScheme::new(m, k1, k2)?, &t)?),
                (None, None) => None,
                _ => return Err(Failure::Usage("give both --k1 and --k2, or neither".into())),
            };
            if json {
                emit_json(&mut out, &serde_json::json!({ "element": t, "matrix": t.matrix(), "result": applied }));
            } else {
                for row in t.matrix() {
                    out.push_str(&format!("{row:?}\n"));
                }
                if let Some(s) = applied {
                    out.push_str(&format!("-> ({},{}) mod {}\n", s.k1, s.k2, s.m));
                }
            }
        }
        Command::Group { m, table, json } => {
            let g = transition_group(m)?;
            if json {
                let tbl = table.then(|| g.table());
                emit_json(&mut out, &serde_json::json!({ "group": g, "table": tbl }));
            } else {
                out.push_str(&format!(
                    "m={} order={} closed={} identity={} inverses={} associative={} abelian={}\n",
                    g.m, g.order, g.closed, g.has_identity, g.has_inverses, g.associative, g.abelian
                ));
                if table {
                    for row in g.table() {
                        let cells: Vec<String> = row.iter().map(|i| format!("{i:>3}")).collect();
                        out.push_str(&cells.join(""));
                        out.push('\n');
                    }
                }
            }
        }
        Command::Refine { level, radius, graphene, json } => {
            if graphene {
                let patch = refined_graphene(level, radius)?;
                if json {
                    out.push_str(&Document::Patch(patch).to_json());
                } else {
                    out.push_str(&format!(
                        "M={level}: {} vertices, {} hexagons\n",
                        patch.vertices.len(),
                        patch.hexagons.len()
                    ));
                }
            } else {
                let lattice = refine_lattice(level, radius)?;
                if json {
                    out.push_str(&Document::Points(PointSet::from(&lattice)).to_json());
                } else {
                    out.push_str(&format!("M={level}: {} points of (1/{level})P\n", lattice.points.len()));
                }
            }
        }
        Command::ProximityReport { radius, json } => {
            let report = proximity_refinement_report(&build_by_congruence(radius, 0)?)?;
            if json {
                emit_json(&mut out, &report);
            } else {
                out.push_str(&format!(
                    "{} interior cells; triangles={} equilateral={} corners=Q:{} corners+sites=P:{}\n",
                    report.interior_cells,
                    report.all_triangles,
                    report.all_equilateral,
                    report.corner_set_equals_q,
                    report.corners_and_sites_equal_p
                ));
                out.push_str(&format!(
                    "squared edge {} (P triangles {}), ratio {}\n{}\n",
                    report.cell_squared_edge, report.p_triangle_squared_edge, report.squared_edge_ratio, report.note
                ));
            }
        }
        Command::Verify { radius, json } => {
            let report = verify_all(radius)?;
            if json {
                emit_json(&mut out, &report);
            } else {
                for c in &report.checks {
                    out.push_str(&format!("{} {} ({})\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail));
                }
            }
            print!("{out}");
            return if report.passed { Ok(String::new()) } else { Err(Failure::Verification) };
        }
        Command::Render { input, out: target, hide_classes, json } => {
            let text = fs::read_to_string(&input).map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
            let doc = parse_document(&text)?;
            let spec = RenderSpec { show_classes: !hide_classes, ..RenderSpec::default() };
            let svg = render_document(&doc, &spec)?;
            match target {
                Some(path) => {
                    fs::write(&path, &svg).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    if json {
                        emit_json(
                            &mut out,
                            &serde_json::json!({ "out": path.display().to_string(), "bytes": svg.len() }),
                        );
                    }
                }
                None => out.push_str(&svg),
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
