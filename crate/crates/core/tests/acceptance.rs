//! Acceptance suite: one numbered criterion per check, each printed as a
//! PASS/FAIL line. Runs without the libtest harness so the lines always show.
//!
//! Expected values are written out by hand here rather than recomputed with
//! library helpers, so each criterion is checked against an independent oracle.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use graphene::algebra::{weyl_group_a2, weyl_group_order_a2, weyl_orbit, AlgebraId, WeightVector};
use graphene::colouring::{compose_transitions, enumerate_colourings, transition_group, TransitionElement};
use graphene::exact::{frac, rat, Rational};
use graphene::graphene::{build, build_by_congruence, Method};
use graphene::lattice::{brillouin_zone, p_patch, scaled_weight_points, voronoi_vertex_set, Disk, LatticePoint};
use graphene::projection::{apply, compose_chain, lift_a2_to_g2, projection_matrix, ProjectionChain};
use graphene::refinement::{basic_tile_points, proximity_refinement_report, refine_lattice, refined_graphene};

use AlgebraId::{A2, A3, B3, C3, G2};

/// Margin trimmed from the disk before comparing constructions.
const TRIM_MARGIN: i64 = 2;

fn w(alg: AlgebraId, c: &[i64]) -> WeightVector {
    WeightVector::from_ints(alg, c).unwrap()
}

fn set(alg: AlgebraId, pts: &[&[i64]]) -> BTreeSet<WeightVector> {
    pts.iter().map(|c| w(alg, c)).collect()
}

const G2_ORBIT: [[i64; 2]; 6] = [[0, 1], [1, -1], [-1, 2], [1, -2], [-1, 1], [0, -1]];
const A2_HEXAGON: [[i64; 2]; 6] = [[1, 0], [0, 1], [-1, 1], [-1, 0], [0, -1], [1, -1]];

fn criterion_1() -> String {
    let cases: [(AlgebraId, &[i64], BTreeSet<WeightVector>); 4] = [
        (G2, &[0, 1], G2_ORBIT.iter().map(|c| w(G2, c)).collect()),
        (A3, &[0, 1, 0], set(A3, &[&[0, 1, 0], &[1, -1, 1], &[1, 0, -1], &[0, -1, 0], &[-1, 1, -1], &[-1, 0, 1]])),
        (B3, &[1, 0, 0], set(B3, &[&[1, 0, 0], &[-1, 1, 0], &[0, -1, 2], &[-1, 0, 0], &[1, -1, 0], &[0, 1, -2]])),
        (C3, &[1, 0, 0], set(C3, &[&[1, 0, 0], &[-1, 1, 0], &[0, -1, 1], &[-1, 0, 0], &[1, -1, 0], &[0, 1, -1]])),
    ];
    for (alg, dom, expected) in cases {
        let orbit = weyl_orbit(&w(alg, dom)).unwrap();
        assert_eq!(orbit.len(), 6, "{alg} orbit size");
        assert_eq!(orbit.as_set(), expected, "{alg} orbit");
    }
    "G2, A3, B3, C3 orbits exact, size 6 each".into()
}

fn criterion_2() -> String {
    let pr = projection_matrix(G2, A2).unwrap();
    // G2 weight -> A2 image, worked out by hand.
    let pairs = [
        ([0, 1], [1, 0]),
        ([1, -1], [0, 1]),
        ([-1, 2], [1, -1]),
        ([1, -2], [-1, 1]),
        ([-1, 1], [0, -1]),
        ([0, -1], [-1, 0]),
    ];
    for (g, a) in pairs {
        assert_eq!(apply(&pr, &w(G2, &g)).unwrap(), w(A2, &a), "image of {g:?}");
    }
    let image: BTreeSet<_> = G2_ORBIT.iter().map(|g| apply(&pr, &w(G2, g)).unwrap()).collect();
    let t1 = set(A2, &[&[1, 0], &[-1, 1], &[0, -1]]);
    let t2 = set(A2, &[&[0, 1], &[1, -1], &[-1, 0]]);
    assert_eq!(weyl_orbit(&w(A2, &[1, 0])).unwrap().as_set(), t1);
    assert_eq!(weyl_orbit(&w(A2, &[0, 1])).unwrap().as_set(), t2);
    assert!(t1.is_disjoint(&t2));
    assert_eq!(image, t1.union(&t2).cloned().collect());
    "six images exact; splits into two triangular A2 orbits".into()
}

fn mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    a.iter().map(|row| (0..b[0].len()).map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum()).collect()).collect()
}

fn criterion_3() -> String {
    let expected = vec![vec![1, 1, 1], vec![0, 1, 0]];
    let m = |s, t| projection_matrix(s, t).unwrap().entries;
    assert_eq!(mul(&m(G2, A2), &m(B3, G2)), expected);
    assert_eq!(mul(&m(A3, A2), &m(B3, A3)), expected);
    assert_eq!(compose_chain(&ProjectionChain::through(&[B3, G2, A2]).unwrap()).unwrap().entries, expected);
    assert_eq!(compose_chain(&ProjectionChain::through(&[B3, A3, A2]).unwrap()).unwrap().entries, expected);
    "both chains give [[1,1,1],[0,1,0]]".into()
}

fn criterion_4() -> String {
    let radius = rat(10);
    let inner = Disk::interior(radius, rat(TRIM_MARGIN));
    let trimmed = |m: Method| -> BTreeSet<LatticePoint> {
        build(m, radius).unwrap().vertices.into_iter().filter(|v| inner.contains(v)).collect()
    };
    let reference = trimmed(Method::Congruence);
    for m in Method::ALL {
        assert_eq!(trimmed(m), reference, "{m} differs from CONGRUENCE");
    }
    assert!(reference.len() >= 200, "only {} vertices", reference.len());
    format!("7 routes agree on {} vertices (radius 10, margin 2)", reference.len())
}

fn criterion_5() -> String {
    let radius = rat(10);
    let inner = Disk::interior(radius, rat(TRIM_MARGIN));
    let corners: BTreeSet<LatticePoint> = voronoi_vertex_set(&Disk::new(radius).unwrap())
        .iter()
        .map(|p| p.to_lattice().expect("corners are weights"))
        .filter(|p| inner.contains(p))
        .collect();
    let k12: BTreeSet<LatticePoint> =
        p_patch(&inner).into_iter().filter(|p| (p.x + 2 * p.y).rem_euclid(3) != 0).collect();
    assert_eq!(corners, k12);
    let cell = brillouin_zone(&LatticePoint::ORIGIN).unwrap();
    assert_eq!(cell.corners.len(), 6);
    for c in &cell.corners {
        assert_eq!(c.norm_sq(), frac(2, 3));
    }
    format!("{} corners = K1∪K2 on interior; origin cell corners norm² 2/3", corners.len())
}

fn criterion_6() -> String {
    let mut hexagons = 0;
    for m in Method::ALL {
        for h in build(m, rat(10)).unwrap().hexagons {
            let classes: Vec<i64> = h.vertices.iter().map(|v| (v.x + 2 * v.y).rem_euclid(3)).collect();
            assert_eq!(classes, [1, 2, 1, 2, 1, 2], "{m} hexagon at {}", h.center);
            hexagons += 1;
        }
    }
    format!("{hexagons} hexagons over 7 routes alternate 1,2,1,2,1,2")
}

fn criterion_7() -> String {
    assert_eq!(weyl_group_order_a2(), 6);
    let distinct: BTreeSet<_> = weyl_group_a2().into_iter().collect();
    assert_eq!(distinct.len(), 6);
    "closure of {r1,r2} has 6 elements".into()
}

fn criterion_8() -> String {
    let types = |m| -> BTreeSet<(u32, u32)> { enumerate_colourings(m).unwrap().iter().map(|s| (s.k1, s.k2)).collect() };
    let two: BTreeSet<_> = [(1, 0), (0, 1), (1, 1)].into_iter().collect();
    let three: BTreeSet<_> = [(1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 2), (1, 2), (2, 1)].into_iter().collect();
    assert_eq!(enumerate_colourings(2).unwrap().len(), 3);
    assert_eq!(enumerate_colourings(3).unwrap().len(), 8);
    assert_eq!(types(2), two);
    assert_eq!(types(3), three);
    "3 schemes mod 2, 8 schemes mod 3, matching the listed types".into()
}

fn criterion_9() -> String {
    for m in [2i64, 3, 5] {
        let g = transition_group(m).unwrap();
        assert!(g.closed && g.abelian && g.has_identity && g.has_inverses && g.associative, "m={m}");
        assert_eq!(g.order, (m * m) as usize);
        assert_eq!(g.elements.iter().filter(|t| **t == TransitionElement::identity(m).unwrap()).count(), 1);
        assert!(g.elements.contains(&TransitionElement::new(m, 0, 0).unwrap()));
        // Independent exhaustive pass: composing is adding shifts mod m.
        for a in &g.elements {
            for b in &g.elements {
                let c = compose_transitions(a, b).unwrap();
                assert_eq!((c.l1, c.l2), ((a.l1 + b.l1) % m as u32, (a.l2 + b.l2) % m as u32));
            }
        }
    }
    "m = 2, 3, 5: closed, abelian, identity, inverses, order m²".into()
}

fn criterion_10() -> String {
    for m in 1..=10i64 {
        assert_eq!(basic_tile_points(m).unwrap().len() as i64, (m + 1) * (m + 2) / 2, "|F_{m}|");
    }
    let radius = rat(6);
    let disk = Disk::new(radius).unwrap();
    for m in [1i64, 2, 3, 5] {
        let refined: BTreeSet<_> = refine_lattice(m, radius).unwrap().points.into_iter().collect();
        let mut brute = BTreeSet::new();
        for x in -13 * m..=13 * m {
            for y in -13 * m..=13 * m {
                let p = LatticePoint::scaled(x, y, m);
                if disk.contains(&p) {
                    brute.insert(p);
                }
            }
        }
        assert_eq!(refined, brute, "refineLattice({m}, 6)");
        assert_eq!(scaled_weight_points(m, &disk).len(), brute.len());
    }
    let r: Rational = rat(2);
    for m in [2i64, 3] {
        let fine = refined_graphene(m, r).unwrap();
        let coarse = build_by_congruence(r * rat(m), 0).unwrap();
        let scaled: Vec<LatticePoint> = fine.vertices.iter().map(|v| LatticePoint::new(v.x, v.y)).collect();
        assert_eq!(scaled, coarse.vertices, "vertices M={m}");
        let centres: Vec<LatticePoint> =
            fine.hexagons.iter().map(|h| LatticePoint::new(h.center.x, h.center.y)).collect();
        let coarse_centres: Vec<LatticePoint> = coarse.hexagons.iter().map(|h| h.center).collect();
        assert_eq!(centres, coarse_centres, "hexagons M={m}");
    }
    "|F_M| = C(M+2,2) for M ≤ 10; refined lattice and graphene exact".into()
}

fn criterion_11() -> String {
    let lifted: Vec<WeightVector> = A2_HEXAGON.iter().map(|a| lift_a2_to_g2(&w(A2, a)).unwrap()).collect();
    let distinct: BTreeSet<_> = lifted.iter().cloned().collect();
    assert_eq!(distinct.len(), 6, "not injective");
    assert_eq!(distinct, G2_ORBIT.iter().map(|c| w(G2, c)).collect());
    "inverse maps the A2 hexagon bijectively onto the G2 orbit".into()
}

fn criterion_12() -> String {
    let patch = build_by_congruence(rat(8), 0).unwrap();
    let cells = graphene::refinement::proximity_cells(&patch).unwrap();
    assert!(!cells.is_empty());
    for cell in &cells {
        assert_eq!(cell.corners.len(), 3, "cell at {}", cell.site);
        for c in &cell.corners {
            let p = c.to_lattice().expect("corner is a weight");
            assert_eq!((p.x + 2 * p.y).rem_euclid(3), 0, "corner {p} not in K0");
        }
        assert!(cell.edge_norms_sq().iter().all(|e| *e == rat(2)), "cell at {}", cell.site);
    }
    let report = proximity_refinement_report(&patch).unwrap();
    assert!(report.all_triangles && report.all_equilateral);
    assert_eq!(report.squared_edge_ratio, "3");
    assert!(!report.finer_than_p);
    assert!(report.note.contains("larger"));
    format!("{} triangular cells, squared edge ratio 3, discrepancy flagged", cells.len())
}

fn cli(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_graphene")).args(args).output().expect("binary runs");
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

fn criterion_13() -> String {
    let dir = std::env::temp_dir().join(format!("graphene-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let runs: [&[&str]; 4] = [
        &["build", "proj-b3-via-g2", "--radius", "6", "--json"],
        &["colour", "--m", "3", "--k1", "1", "--k2", "2", "--radius", "6", "--json"],
        &["refine", "--M", "3", "--radius", "4", "--json"],
        &["refine", "--M", "2", "--radius", "4", "--graphene", "--json"],
    ];
    let mut bytes = 0;
    for (i, args) in runs.iter().enumerate() {
        let first = cli(args);
        assert_eq!(first, cli(args), "{args:?}");
        let json = dir.join(format!("doc{i}.json"));
        std::fs::write(&json, &first).unwrap();
        let path = json.to_str().unwrap();
        let svg_a = cli(&["render", "--in", path]);
        assert_eq!(svg_a, cli(&["render", "--in", path]), "render {args:?}");
        assert!(svg_a.starts_with(b"<svg"));
        bytes += first.len() + svg_a.len();
    }
    std::fs::remove_dir_all(&dir).ok();
    format!("build/colour/refine/render byte-identical across runs ({bytes} bytes)")
}

fn main() {
    type Criterion = (&'static str, fn() -> String);
    let criteria: [Criterion; 13] = [
        ("orbit reproduction", criterion_1),
        ("G2 -> A2 projection replay", criterion_2),
        ("B3 -> A2 chains commute", criterion_3),
        ("six-way construction equality", criterion_4),
        ("Brillouin/congruence bridge", criterion_5),
        ("hexagon class structure", criterion_6),
        ("A2 Weyl group order", criterion_7),
        ("colouring counts", criterion_8),
        ("transition group axioms", criterion_9),
        ("F_M counts and spread", criterion_10),
        ("inverse projection", criterion_11),
        ("proximity-cell facts", criterion_12),
        ("determinism", criterion_13),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{ms} ms]", i + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:>2} FAIL  {name}: {msg} [{ms} ms]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
