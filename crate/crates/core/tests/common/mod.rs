//! Independent oracles and random instance generators shared by the
//! integration suites. Nothing here calls the code paths it is used to check.

#![allow(dead_code)]

use discrete_smooth::{Adjacency, Domain};
use rand::seq::SliceRandom;
use rand::Rng;

/// All-pairs hop distances by Floyd-Warshall over an explicit edge list.
pub fn floyd_warshall(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    const INF: usize = usize::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(a, b) in edges {
        d[a][b] = 1;
        d[b][a] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Random connected graph: a random spanning tree plus extra edges.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize) -> (Domain, Vec<(usize, usize)>) {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.push((parent, order[i]));
    }
    let extra = rng.gen_range(0..=n);
    for _ in 0..extra {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            edges.push((a, b));
        }
    }
    let dom = Domain::graph(n, &edges).expect("spanning tree keeps the graph connected");
    (dom, edges)
}

/// Explicit edge list of a domain (used to feed the Floyd-Warshall oracle).
pub fn edge_list(dom: &Domain) -> Vec<(usize, usize)> {
    (0..dom.len())
        .flat_map(|a| dom.neighbors(a).iter().map(move |&b| (a, b)))
        .filter(|(a, b)| a < b)
        .collect()
}

/// Random path or grid domain within the given size limits.
pub fn random_path_or_grid<R: Rng>(rng: &mut R, max_path: usize, max_side: usize) -> Domain {
    if rng.gen_bool(0.5) {
        Domain::path(rng.gen_range(2..=max_path)).unwrap()
    } else {
        let adj = if rng.gen_bool(0.5) {
            Adjacency::Four
        } else {
            Adjacency::Eight
        };
        Domain::grid(
            rng.gen_range(2..=max_side),
            rng.gen_range(2..=max_side),
            adj,
        )
        .unwrap()
    }
}

/// Distinct random vertices.
pub fn random_vertices<R: Rng>(rng: &mut R, n: usize, count: usize) -> Vec<usize> {
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    all.truncate(count.min(n));
    all
}

/// Every assignment of levels `1..=n_levels` to the vertices that agrees with
/// `samples` and is gradually varied along `edges`.
pub fn enumerate_gradual_interpolants(
    v_count: usize,
    edges: &[(usize, usize)],
    n_levels: usize,
    samples: &[(usize, usize)],
) -> Vec<Vec<usize>> {
    let mut fixed = vec![None; v_count];
    for &(v, i) in samples {
        fixed[v] = Some(i);
    }
    let mut out = Vec::new();
    let mut current = vec![1usize; v_count];
    let total = (n_levels as u64).pow(v_count as u32);
    for code in 0..total {
        let mut c = code;
        for slot in current.iter_mut() {
            *slot = (c % n_levels as u64) as usize + 1;
            c /= n_levels as u64;
        }
        if fixed
            .iter()
            .zip(&current)
            .any(|(f, &x)| f.is_some_and(|i| i != x))
        {
            continue;
        }
        if edges
            .iter()
            .all(|&(a, b)| current[a].abs_diff(current[b]) <= 1)
        {
            out.push(current.clone());
        }
    }
    out
}

/// Strict local extremum count over the full 8-neighborhood of interior
/// vertices (no Hessians, no tolerances).
pub fn strict_local_extrema(values: &[f64], width: usize, height: usize) -> usize {
    let mut count = 0;
    for y in 1..height - 1 {
        for x in 1..width - 1 {
            let c = values[y * width + x];
            let mut all_lower = true;
            let mut all_higher = true;
            for dy in [-1isize, 0, 1] {
                for dx in [-1isize, 0, 1] {
                    if dx == 0 && dy == 0 {
                        continue;
                    }
                    let nx = (x as isize + dx) as usize;
                    let ny = (y as isize + dy) as usize;
                    let v = values[ny * width + nx];
                    all_lower &= v < c;
                    all_higher &= v > c;
                }
            }
            if all_lower || all_higher {
                count += 1;
            }
        }
    }
    count
}

/// Sign flips of consecutive nonzero first differences, counted directly.
pub fn sign_flips(seq: &[f64]) -> usize {
    let signs: Vec<f64> = seq
        .windows(2)
        .map(|w| w[1] - w[0])
        .filter(|d| *d != 0.0)
        .map(f64::signum)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Exhaustive maximum pairwise difference quotient.
pub fn pairwise_lip(seq: &[f64]) -> f64 {
    let mut best = 0.0f64;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            best = best.max((seq[j] - seq[i]).abs() / (j - i) as f64);
        }
    }
    best
}

/// Centered second-difference residuals of a 1-D sequence at free interior
/// indices.
pub fn free_residuals_1d(values: &[f64], guiding: &[bool]) -> Vec<f64> {
    (1..values.len().saturating_sub(1))
        .filter(|&j| !guiding[j])
        .map(|j| (2.0 * values[j] - values[j - 1] - values[j + 1]).abs())
        .collect()
}

/// Row and column centered residuals at free interior grid vertices.
pub fn free_residuals_grid(
    values: &[f64],
    width: usize,
    height: usize,
    guiding: &[bool],
) -> Vec<f64> {
    let mut out = Vec::new();
    for y in 1..height - 1 {
        for x in 1..width - 1 {
            let v = y * width + x;
            if guiding[v] {
                continue;
            }
            out.push((2.0 * values[v] - values[v - 1] - values[v + 1]).abs());
            out.push((2.0 * values[v] - values[v - width] - values[v + width]).abs());
        }
    }
    out
}

pub mod pipeline {
    use std::path::{Path, PathBuf};
    use std::process::{Command, Output};

    pub fn fixtures() -> PathBuf {
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
    }

    pub fn goldens() -> PathBuf {
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
    }

    pub fn workdir(name: &str) -> PathBuf {
        let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
        let _ = std::fs::remove_dir_all(&dir);
        std::fs::create_dir_all(&dir).unwrap();
        dir
    }

    pub fn dsmooth(args: &[&str]) -> Output {
        Command::new(env!("CARGO_BIN_EXE_dsmooth"))
            .args(args)
            .output()
            .expect("dsmooth binary runs")
    }

    fn step(args: &[&str]) -> Result<(), String> {
        let out = dsmooth(args);
        if out.status.code() == Some(0) {
            Ok(())
        } else {
            Err(format!(
                "`dsmooth {}` exited {:?}: {}",
                args.join(" "),
                out.status.code(),
                String::from_utf8_lossy(&out.stderr)
            ))
        }
    }

    /// fit -> analyze -> polish -> analyze -> decompose on the 1-D and 2-D
    /// fixtures. Returns the names of the files written into `work`.
    pub fn run(work: &Path) -> Result<Vec<String>, String> {
        let fx = fixtures();
        let f = |name: &str| fx.join(name).to_string_lossy().into_owned();
        let w = |name: &str| work.join(name).to_string_lossy().into_owned();
        let cases: [(&str, &[&str], &str, &str); 2] = [
            (
                "path",
                &["--path", "12"],
                "path_levels.csv",
                "path_guiding.csv",
            ),
            (
                "grid",
                &["--grid", "9x9"],
                "grid_levels.csv",
                "grid_guiding.csv",
            ),
        ];
        let mut files = Vec::new();
        for (tag, dom, samples, guiding) in cases {
            let fit = w(&format!("{tag}_fit.csv"));
            let mut args = vec!["fit", "--samples"];
            let s = f(samples);
            args.push(&s);
            args.extend_from_slice(dom);
            args.extend_from_slice(&[
                "--levels-range",
                "0:4:5",
                "--strategy",
                "mid",
                "--out",
                &fit,
            ]);
            step(&args)?;

            let a1 = w(&format!("{tag}_analyze_fit.json"));
            let pgm = w(&format!("{tag}_fit.pgm"));
            let mut args = vec!["analyze", "--field", &fit, "--out", &a1];
            if tag == "grid" {
                args.extend_from_slice(&["--sn", "6", "--pgm", &pgm]);
            }
            step(&args)?;

            let pol = w(&format!("{tag}_polished.csv"));
            let rep = w(&format!("{tag}_polish_report.json"));
            let g = f(guiding);
            step(&[
                "polish",
                "--field",
                &fit,
                "--guiding",
                &g,
                "--out",
                &pol,
                "--report",
                &rep,
            ])?;

            let a2 = w(&format!("{tag}_analyze_polished.json"));
            let mut args = vec!["analyze", "--field", &pol, "--out", &a2];
            if tag == "grid" {
                args.extend_from_slice(&["--sn", "6"]);
            }
            step(&args)?;

            let mac = w(&format!("{tag}_macro.csv"));
            let mic = w(&format!("{tag}_micro.csv"));
            step(&[
                "decompose",
                "--field",
                &pol,
                "--stride",
                "2",
                "--macro-out",
                &mac,
                "--micro-out",
                &mic,
            ])?;

            for name in [
                "fit.csv",
                "analyze_fit.json",
                "polished.csv",
                "polish_report.json",
                "analyze_polished.json",
                "macro.csv",
                "micro.csv",
            ] {
                files.push(format!("{tag}_{name}"));
            }
            if tag == "grid" {
                files.push("grid_fit.pgm".into());
            }
        }
        Ok(files)
    }

    /// Compares every produced file with its golden byte for byte. With
    /// `UPDATE_GOLDENS` set the goldens are rewritten instead.
    pub fn check_goldens(work: &Path, files: &[String]) -> Result<(), String> {
        let gold = goldens();
        let update = std::env::var_os("UPDATE_GOLDENS").is_some();
        if update {
            std::fs::create_dir_all(&gold).map_err(|e| e.to_string())?;
        }
        for name in files {
            let got = std::fs::read(work.join(name)).map_err(|e| format!("{name}: {e}"))?;
            if update {
                std::fs::write(gold.join(name), &got).map_err(|e| e.to_string())?;
                continue;
            }
            let want = std::fs::read(gold.join(name)).map_err(|e| format!("golden {name}: {e}"))?;
            if got != want {
                return Err(format!("{name} differs from its golden"));
            }
        }
        Ok(())
    }
}
