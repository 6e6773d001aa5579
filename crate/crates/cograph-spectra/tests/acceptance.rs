//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::HashSet;
use std::time::Instant;

use cograph_spectra::graph::Graph;
use cograph_spectra::neighborhood::{
    coduplication_classes, duplication_classes, is_threshold,
};
use cograph_spectra::spectral::MultiplicitySpectrum;
use cograph_spectra::verify::{
    check_interlacing, check_mult_bounds, check_threshold_simple, CampaignConfig, CampaignMode,
    CheckStatus,
};
use cograph_spectra::{
    char_poly, count_eigs_open_interval, enumerate_all_graphs, enumerate_cographs,
    find_induced_p4, is_cograph, numeric_eigenvalues, random_cograph, rank_exact, run_campaign,
    IntPoly,
};

fn criterion(name: &str, body: impl FnOnce() -> Result<String, String>) {
    match body() {
        Ok(detail) => println!("acceptance {name}: PASS ({detail})"),
        Err(reason) => {
            println!("acceptance {name}: FAIL ({reason})");
            panic!("acceptance {name} failed: {reason}");
        }
    }
}

fn seeded_graph(n: usize, seed: u64) -> Graph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

#[test]
fn criterion_01_interval_theorem() {
    criterion("01 interval_theorem", || {
        let start = Instant::now();
        let mut cographs = 0u64;
        for n in 1..=10 {
            for g in enumerate_cographs(n).map_err(|e| e.to_string())? {
                cographs += 1;
                let count = count_eigs_open_interval(&g, -1, 0);
                if count != 0 {
                    return Err(format!(
                        "cograph {g:?} has {count} eigenvalue(s) in (-1,0)"
                    ));
                }
            }
        }
        let mut non_cographs = 0u64;
        for n in 1..=7 {
            for g in enumerate_all_graphs(n).map_err(|e| e.to_string())? {
                if is_cograph(&g) {
                    continue;
                }
                non_cographs += 1;
                let Some(w) = find_induced_p4(&g) else {
                    return Err(format!("non-cograph {g:?} yielded no P4 witness"));
                };
                if g.induced_subgraph(&w.vertices).map_err(|e| e.to_string())? != Graph::path(4) {
                    return Err(format!("witness {w:?} does not induce a P4 in {g:?}"));
                }
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs() >= 600 {
            return Err(format!("sweep took {elapsed:?}, budget is 10 minutes"));
        }
        Ok(format!(
            "{cographs} cographs n<=10 with zero (-1,0) eigenvalues, \
             {non_cographs} non-cographs n<=7 all witnessed, {elapsed:?}"
        ))
    });
}

#[test]
fn criterion_02_multiplicity_formulas() {
    criterion("02 multiplicity_formulas", || {
        let mut verbatim_failures = 0u64;
        let mut graphs = 0u64;
        for n in 1..=10 {
            for g in enumerate_cographs(n).map_err(|e| e.to_string())? {
                graphs += 1;
                let spectrum = MultiplicitySpectrum::of_graph(&g);
                let dup_sum: u32 =
                    duplication_classes(&g).iter().map(|c| c.len() as u32 - 1).sum();
                let codup_sum: u32 =
                    coduplication_classes(&g).iter().map(|c| c.len() as u32 - 1).sum();
                let iso = g.has_isolated_vertex();
                let corrected = dup_sum + iso as u32;
                if spectrum.mult_zero != corrected {
                    return Err(format!(
                        "corrected zero formula broke on {g:?}: exact {} vs {corrected}",
                        spectrum.mult_zero
                    ));
                }
                if spectrum.mult_minus_one != codup_sum {
                    return Err(format!(
                        "minus-one formula broke on {g:?}: exact {} vs {codup_sum}",
                        spectrum.mult_minus_one
                    ));
                }
                // The verbatim (uncorrected) sum must fail exactly on graphs
                // with an isolated vertex.
                let verbatim_fails = spectrum.mult_zero != dup_sum;
                if verbatim_fails != iso {
                    return Err(format!(
                        "verbatim formula and isolated-vertex predicate disagree on {g:?}"
                    ));
                }
                verbatim_failures += verbatim_fails as u64;
            }
        }
        Ok(format!(
            "{graphs} cographs n<=10; corrected formulas exact everywhere; \
             verbatim formula fails on exactly the {verbatim_failures} isolated-vertex graphs"
        ))
    });
}

#[test]
fn criterion_03_rank_law() {
    criterion("03 rank_law", || {
        let mut graphs = 0u64;
        for n in 1..=10 {
            for g in enumerate_cographs(n).map_err(|e| e.to_string())? {
                graphs += 1;
                let distinct_nonzero: HashSet<u64> = g
                    .vertices()
                    .map(|v| g.open_neighborhood(v))
                    .filter(|&row| row != 0)
                    .collect();
                let rank0 = rank_exact(&g, 0);
                if rank0 != distinct_nonzero.len() {
                    return Err(format!(
                        "rank law broke on {g:?}: rank {rank0} vs {} distinct nonzero rows",
                        distinct_nonzero.len()
                    ));
                }
                let spectrum = MultiplicitySpectrum::of_graph(&g);
                if n - rank0 != spectrum.mult_zero as usize {
                    return Err(format!("nullity cross-check broke on {g:?}"));
                }
                if n - rank_exact(&g, 1) != spectrum.mult_minus_one as usize {
                    return Err(format!("A+I nullity cross-check broke on {g:?}"));
                }
            }
        }
        Ok(format!("{graphs} cographs n<=10, rank = distinct nonzero rows, nullities agree"))
    });
}

#[test]
fn criterion_04_multiplicity_bounds() {
    criterion("04 multiplicity_bounds", || {
        let mut graphs = 0u64;
        for n in 1..=10 {
            for g in enumerate_cographs(n).map_err(|e| e.to_string())? {
                graphs += 1;
                let record = check_mult_bounds(&g);
                if record.status != CheckStatus::Pass {
                    return Err(format!("bound violated on {g:?}: {record:?}"));
                }
            }
        }
        Ok(format!("{graphs} cographs n<=10, zero bound violations"))
    });
}

#[test]
fn criterion_05_threshold_simplicity() {
    criterion("05 threshold_simplicity", || {
        let mut thresholds = 0u64;
        for n in 1..=10 {
            for g in enumerate_cographs(n).map_err(|e| e.to_string())? {
                if !is_threshold(&g) {
                    continue;
                }
                thresholds += 1;
                let record = check_threshold_simple(&g);
                if record.status != CheckStatus::Pass {
                    return Err(format!("repeated eigenvalue on threshold graph {g:?}"));
                }
            }
        }
        // Independent split oracle: some vertex subset is a clique whose
        // complement is an independent set.
        let is_split_brute = |g: &Graph| -> bool {
            let n = g.order();
            (0u64..(1 << n)).any(|mask| {
                let clique_ok = (0..n).all(|u| {
                    (u + 1..n).all(|v| {
                        mask & (1 << u) == 0 || mask & (1 << v) == 0 || g.has_edge(u, v)
                    })
                });
                let independent_ok = (0..n).all(|u| {
                    (u + 1..n).all(|v| {
                        mask & (1 << u) != 0 || mask & (1 << v) != 0 || !g.has_edge(u, v)
                    })
                });
                clique_ok && independent_ok
            })
        };
        let mut all_graphs = 0u64;
        for n in 1..=7 {
            for g in enumerate_all_graphs(n).map_err(|e| e.to_string())? {
                all_graphs += 1;
                let by_order = is_threshold(&g);
                let by_definition = is_cograph(&g) && is_split_brute(&g);
                if by_order != by_definition {
                    return Err(format!(
                        "threshold definitions disagree on {g:?}: total-order {by_order}, \
                         cograph-and-split {by_definition}"
                    ));
                }
            }
        }
        Ok(format!(
            "{thresholds} threshold graphs n<=10 all simple away from 0/-1; \
             definitions agree on {all_graphs} graphs n<=7"
        ))
    });
}

#[test]
fn criterion_06_conjecture_sweep() {
    criterion("06 conjecture_sweep", || {
        let exhaustive = run_campaign(&CampaignConfig {
            n_min: 1,
            n_max: 10,
            mode: CampaignMode::Exhaustive,
            samples: 0,
            seed: 0,
            workers: 4,
        })
        .map_err(|e| e.to_string())?;
        if exhaustive.failure_count() != 0 {
            return Err(format!("exhaustive failures: {:?}", exhaustive.failures));
        }
        if exhaustive.counterexample_count() != 0 {
            return Err(format!(
                "conjecture counterexamples at n<=10: {:?}",
                exhaustive.conjecture_counterexamples
            ));
        }
        let random = run_campaign(&CampaignConfig {
            n_min: 20,
            n_max: 20,
            mode: CampaignMode::Random,
            samples: 1000,
            seed: 2024,
            workers: 4,
        })
        .map_err(|e| e.to_string())?;
        if random.total_graphs < 1000 {
            return Err(format!("random campaign ran only {} graphs", random.total_graphs));
        }
        if random.failure_count() != 0 {
            return Err(format!("random campaign failures: {:?}", random.failures));
        }
        // The conjecture is open: counterexamples would be findings, not bugs.
        let conjecture_status = if random.counterexample_count() == 0 {
            "no counterexamples".to_string()
        } else {
            format!("COUNTEREXAMPLES FOUND: {:?}", random.conjecture_counterexamples)
        };
        Ok(format!(
            "{} cographs n<=10 clean; random n=20 x{} zero failures, conjecture: {}",
            exhaustive.total_graphs, random.total_graphs, conjecture_status
        ))
    });
}

#[test]
fn criterion_07_enumeration_oracle() {
    criterion("07 enumeration_oracle", || {
        // Brute-force oracle: all labeled graphs, filtered P4-free, counted
        // up to isomorphism by full-permutation canonicalization.
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let mut items: Vec<usize> = (0..n).collect();
            fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if k <= 1 {
                    out.push(items.clone());
                    return;
                }
                for i in 0..k {
                    heap(k - 1, items, out);
                    if k.is_multiple_of(2) {
                        items.swap(i, k - 1);
                    } else {
                        items.swap(0, k - 1);
                    }
                }
            }
            heap(n, &mut items, &mut out);
            out
        }
        for n in 1..=6usize {
            let perms = permutations(n);
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
            let mut canonical_forms: HashSet<u64> = HashSet::new();
            for mask in 0u64..(1 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| mask & (1 << k) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges);
                if find_induced_p4(&g).is_some() {
                    continue;
                }
                let code = perms
                    .iter()
                    .map(|p| {
                        pairs.iter().fold(0u64, |acc, &(u, v)| {
                            (acc << 1) | g.has_edge(p[u], p[v]) as u64
                        })
                    })
                    .min()
                    .expect("at least one permutation");
                canonical_forms.insert(code);
            }
            let enumerated = enumerate_cographs(n).map_err(|e| e.to_string())?.len();
            if canonical_forms.len() != enumerated {
                return Err(format!(
                    "n={n}: enumeration yields {enumerated}, oracle says {}",
                    canonical_forms.len()
                ));
            }
        }
        Ok("counts for n=1..6 match the labeled brute-force oracle".to_string())
    });
}

#[test]
fn criterion_08_exact_numeric_agreement() {
    criterion("08 exact_numeric_agreement", || {
        if char_poly(&Graph::path(4)) != IntPoly::from_i64_coeffs(&[1, 0, -3, 0, 1]) {
            return Err("P4 characteristic polynomial is not x^4 - 3x^2 + 1".to_string());
        }
        let margin = 1e-4;
        let mut compared = 0u64;
        for i in 0..500u64 {
            let n = 1 + (i as usize % 16);
            let g = random_cograph(n, 5000 + i);
            let spectrum = MultiplicitySpectrum::of_graph(&g);
            let numeric = numeric_eigenvalues(&g, 1e-9).map_err(|e| e.to_string())?;
            for a in -(n as i64 + 1)..=(n as i64) {
                let b = a + 1;
                // Skip windows with a numeric eigenvalue too close to an
                // endpoint; the criterion only binds away from the margin.
                let near = numeric.iter().any(|&x| {
                    (x - a as f64).abs() < 2.0 * margin || (x - b as f64).abs() < 2.0 * margin
                });
                if near {
                    continue;
                }
                let numeric_count = numeric
                    .iter()
                    .filter(|&&x| x > a as f64 + margin && x < b as f64 - margin)
                    .count();
                let exact_count = spectrum.count_roots_open(a, b);
                if numeric_count != exact_count {
                    return Err(format!(
                        "interval ({a},{b}) on {g:?}: numeric {numeric_count}, exact {exact_count}"
                    ));
                }
                compared += 1;
            }
        }
        Ok(format!("500 random cographs n<=16, {compared} interval comparisons agree"))
    });
}

#[test]
fn criterion_09_interlacing_suite() {
    criterion("09 interlacing_suite", || {
        let mut deletions = 0u64;
        for i in 0..200u64 {
            let n = 2 + (i as usize % 9); // orders 2..=10
            let g = seeded_graph(n, 9000 + i);
            let record = check_interlacing(&g);
            if record.status != CheckStatus::Pass {
                return Err(format!("interlacing violated on {g:?}: {record:?}"));
            }
            deletions += n as u64;
        }
        Ok(format!("200 random graphs n<=10, {deletions} single-vertex deletions, zero violations"))
    });
}

#[test]
fn criterion_10_determinism() {
    criterion("10 determinism", || {
        let base = CampaignConfig {
            n_min: 1,
            n_max: 8,
            mode: CampaignMode::Exhaustive,
            samples: 0,
            seed: 42,
            workers: 1,
        };
        let serial = run_campaign(&base).map_err(|e| e.to_string())?.to_json();
        for workers in [2, 4, 8] {
            let parallel = run_campaign(&CampaignConfig { workers, ..base })
                .map_err(|e| e.to_string())?
                .to_json();
            if serial != parallel {
                return Err(format!("summary bytes differ between 1 and {workers} workers"));
            }
        }
        Ok(format!("n=1..8 summaries byte-identical across 1/2/4/8 workers ({} bytes)", serial.len()))
    });
}
