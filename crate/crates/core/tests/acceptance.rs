//! The acceptance suite. Runs every criterion, prints one PASS/FAIL line
//! each with its timing, and exits nonzero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use common::*;
use tiltcover::algebra::{squid, BoundQuiverAlgebra, Path};
use tiltcover::cover::{
    build_cover, check_h3, induced_end_cover, lift_object, lift_transcript, stabilizer, straighten, twist,
    Automorphism, CategoryCover, Side,
};
use tiltcover::derived::{cone, in_class_t, r_value, DMorphism, DObject};
use tiltcover::exactla::{q, Matrix};
use tiltcover::hh::hh_dim;
use tiltcover::quiver::{
    finite_cover_from_monodromy, is_galois_quiver_covering, named, universal_cover_truncated, FiniteGroup, Quiver,
};
use tiltcover::rep::{
    decompose, enumerate_indecomposables, ext1_dim, hom_basis, hom_dim, is_indecomposable, is_isomorphic,
    EnumerationMode, Rep, RepMorphism,
};
use tiltcover::tilt::{
    coresolution, is_tilting_module, module_mutation, reduce_to_tilting, tilting_hasse, AddSubcat, StepKind,
    Transcript,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Debug>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| format!("{e:?}"))
}

fn kronecker() -> tiltcover::rep::Algebra {
    path_algebra(&named::kronecker())
}

fn kronecker_z2() -> CategoryCover {
    let k = kronecker();
    let w: BTreeMap<String, usize> = [("b".to_string(), 1)].into();
    let qc = finite_cover_from_monodromy(k.quiver(), &FiniteGroup::cyclic(2), &w).unwrap();
    build_cover(&k, qc).unwrap()
}

/// `P1 ⊕ P2 -> P1 ⊕ (2,3) -> (2,3) ⊕ (3,4)` over the Kronecker algebra,
/// each step a mutation of the summand with the given dimension vector.
fn kronecker_transcript(k: &tiltcover::rep::Algebra, upto: usize) -> Transcript {
    let mut t = Rep::regular(k);
    let mut tr = Transcript::new(DObject::module(&t).unwrap());
    for target in [[0usize, 1], [1, 2]].into_iter().take(upto) {
        let d = decompose(&t).unwrap().summands;
        let idx = d.iter().position(|x| x.dims() == target).unwrap();
        let mu = module_mutation(&t, idx).unwrap().unwrap();
        tr.steps.push(mu.step(&t).unwrap());
        t = mu.result;
    }
    tr
}

fn criterion_1() -> Outcome {
    let cases: [(usize, &[usize], Vec<_>, usize); 3] =
        [(2, &[1, 1], vec![], 1), (3, &[1, 1, 1], vec![q(1)], 0), (3, &[2, 1, 1], vec![q(1)], 0)];
    let mut seen = Vec::new();
    for (t, p, tau, want) in cases {
        let start = Instant::now();
        let a = ok(squid(t, p, &tau))?;
        let got = ok(hh_dim(&a, 1, 40))?;
        ensure!(got == want, "HH^1 of S({t},{p:?}) is {got}, expected {want}");
        ensure!(start.elapsed() < Duration::from_secs(10), "S({t},{p:?}) took {:?}", start.elapsed());
        seen.push(got);
    }
    Ok(format!("HH^1 = {seen:?}"))
}

/// Connected acyclic quivers on `n` vertices with at most `max_arrows`
/// arrows, one per isomorphism class. Every acyclic quiver has a
/// topological order, so arrows `i -> j` with `i < j` suffice.
fn small_quivers(n: usize, max_arrows: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        pairs: &[(usize, usize)],
        start: usize,
        left: usize,
        cur: &mut Vec<(usize, usize)>,
        emit: &mut dyn FnMut(&[(usize, usize)]),
    ) {
        emit(cur);
        if left == 0 {
            return;
        }
        for i in start..pairs.len() {
            cur.push(pairs[i]);
            rec(pairs, i, left - 1, cur, emit);
            cur.pop();
        }
    }
    rec(&pairs, 0, max_arrows, &mut cur, &mut |edges: &[(usize, usize)]| {
        if !connected(n, edges) {
            return;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut e: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (p[a], p[b])).collect();
                e.sort();
                e
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(edges.to_vec());
        }
    });
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut x = p.clone();
            x.insert(i, n - 1);
            out.push(x);
        }
    }
    out
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let (mut total, mut trees) = (0, 0);
    for n in 1..=5 {
        for edges in small_quivers(n, 5) {
            let qv = ok(Quiver::from_indices(n, &edges))?;
            let a = path_algebra(&qv);
            let hh1 = ok(hh_dim(&a, 1, 200))?;
            let tree = tree_oracle(n, &edges);
            ensure!((hh1 == 0) == tree, "quiver {edges:?} on {n} vertices: HH^1 = {hh1}, tree = {tree}");
            total += 1;
            trees += usize::from(tree);
        }
    }
    ensure!(start.elapsed() < Duration::from_secs(60), "took {:?}", start.elapsed());
    Ok(format!("{total} quivers up to isomorphism, {trees} trees"))
}

/// Tilting modules of linear `A_n` by brute force over sets of interval
/// modules, with Ext from the oracle.
fn brute_force_tilting(n: usize) -> BTreeSet<BTreeSet<Vec<usize>>> {
    let a = path_algebra(&named::linear_a(n));
    let inds: Vec<Rep> = (0..n).flat_map(|lo| (lo..n).map(move |hi| (lo, hi))).map(|(lo, hi)| interval(&a, lo, hi)).collect();
    let k = inds.len();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << k) {
        if mask.count_ones() as usize != n {
            continue;
        }
        let chosen: Vec<&Rep> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| &inds[i]).collect();
        if chosen.iter().all(|x| chosen.iter().all(|y| ext_oracle(x, y) == 0)) {
            out.insert(chosen.iter().map(|x| x.dims().to_vec()).collect());
        }
    }
    out
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut counts = Vec::new();
    for n in [2, 3] {
        let g = ok(tilting_hasse(&path_algebra(&named::linear_a(n)), n))?;
        let found: BTreeSet<BTreeSet<Vec<usize>>> = g
            .modules
            .iter()
            .map(|m| m.iter().map(|&j| g.indecomposables[j].dims().to_vec()).collect())
            .collect();
        let oracle = brute_force_tilting(n);
        ensure!(found == oracle, "A{n}: tilting modules {found:?} differ from brute force {oracle:?}");
        ensure!(g.modules.len() == [0, 1, 2, 5][n], "A{n}: {} tilting modules", g.modules.len());
        ensure!(connected(g.modules.len(), &g.edges), "A{n}: Hasse diagram is disconnected");
        counts.push(g.modules.len());
    }
    ensure!(start.elapsed() < Duration::from_secs(30), "took {:?}", start.elapsed());
    Ok(format!("tilting modules {counts:?}, Hasse diagrams connected"))
}

/// Objects of the class T over `A_3`: three distinct indecomposables, each
/// shifted by 0, 1 or 2, kept when they satisfy the class conditions.
fn class_t_objects() -> Vec<DObject> {
    let a = path_algebra(&named::linear_a(3));
    let inds: Vec<Rep> = (0..3).flat_map(|lo| (lo..3).map(move |hi| (lo, hi))).map(|(lo, hi)| interval(&a, lo, hi)).collect();
    let mut out: Vec<DObject> = Vec::new();
    for i in 0..inds.len() {
        for j in i + 1..inds.len() {
            for k in j + 1..inds.len() {
                for code in 0..27usize {
                    let shifts = [code % 3, code / 3 % 3, code / 9];
                    let parts: Vec<(Rep, i64)> =
                        [i, j, k].iter().zip(shifts).map(|(&m, s)| (inds[m].clone(), s as i64)).collect();
                    let x = DObject::new(&a, &parts).unwrap();
                    if in_class_t(&x).unwrap() && !out.iter().any(|y| y.is_isomorphic(&x).unwrap()) {
                        out.push(x);
                    }
                }
            }
        }
    }
    out
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let objects = class_t_objects();
    ensure!(objects.len() >= 20, "only {} objects generated", objects.len());
    let (mut steps_total, mut seconds) = (0, 0);
    for x in &objects {
        let n = x.algebra().num_vertices() as i64;
        let red = reduce_to_tilting(x).map_err(|e| format!("{x}: {e:?}"))?;
        let steps = red.transcript.steps.len() as i64;
        ensure!(steps <= n * (x.spread() + 1), "{x}: {steps} steps exceed n(spread+1)");
        for s in &red.transcript.steps {
            ensure!(ok(in_class_t(&s.after))?, "{x}: intermediate {} left the class", s.after);
            if s.kind == StepKind::Second {
                ensure!(r_value(&s.after) < r_value(&s.before), "{x}: second kind step did not lower r");
                seconds += 1;
            }
        }
        ensure!(ok(is_tilting_module(&red.module))?, "{x}: output is not tilting");
        ok(red.transcript.replay())?;
        steps_total += steps;
    }
    ensure!(seconds > 0, "no transformation of the second kind was exercised");
    ensure!(start.elapsed() < Duration::from_secs(60), "took {:?}", start.elapsed());
    Ok(format!("{} objects, {steps_total} steps, {seconds} of the second kind", objects.len()))
}

/// Members of the one-parameter family at `(1,1,1,1)` over the total
/// algebra of the Kronecker `Z/2` cover: the cycle with one map scaled.
fn total_family(c: &CategoryCover) -> Vec<Rep> {
    let t = c.total();
    (0..4)
        .map(|lambda| {
            let maps = (0..t.quiver().num_arrows())
                .map(|a| Matrix::scalar(1, &q(if a == 0 { lambda } else { 1 })))
                .collect();
            Rep::new(t, vec![1; 4], maps).unwrap()
        })
        .collect()
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let c = kronecker_z2();
    let base_q = c.base().quiver().clone();
    let mut mods = ok(enumerate_indecomposables(c.total(), 4, EnumerationMode::Sample))?.reps;
    for x in total_family(&c) {
        if ok(is_indecomposable(&x))? && !mods.iter().any(|m| is_isomorphic(m, &x).unwrap()) {
            mods.push(x);
        }
    }
    let g = c.group().order();
    let mut pairs = 0;
    for m in &mods {
        for n in &mods {
            let (fm, fn_) = (c.push_down(m), c.push_down(n));
            let hom_down = hom_oracle(&fm, &fn_);
            let ext_down = (hom_down as i64 - euler(&base_q, fm.dims(), fn_.dims())) as usize;
            let (mut hom_up, mut ext_up) = (0, 0);
            for h in 0..g {
                let gm = c.translate(h, m);
                hom_up += hom_oracle(&gm, n);
                ext_up += ext_oracle(&gm, n);
            }
            ensure!(hom_down == hom_up, "Hom mismatch for {:?}, {:?}", m.dims(), n.dims());
            ensure!(ext_down == ext_up, "Ext mismatch for {:?}, {:?}", m.dims(), n.dims());
            ensure!(ok(c.covering_property_check(m, n, &[0, 1]))?, "library check fails on {:?}, {:?}", m.dims(), n.dims());
            pairs += 1;
        }
    }
    ensure!(start.elapsed() < Duration::from_secs(60), "took {:?}", start.elapsed());
    Ok(format!("{} indecomposables, {pairs} ordered pairs", mods.len()))
}

/// The stabiliser is trivial when no nontrivial translate keeps the
/// dimension vector; otherwise fall back to isomorphism tests.
fn trivial_stabiliser(c: &CategoryCover, x: &Rep) -> bool {
    (1..c.group().order()).all(|g| c.translate(g, x).dims() != x.dims())
        || stabilizer(c, x).unwrap() == vec![c.group().identity()]
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let k = kronecker();
    let c = kronecker_z2();
    let mut lifted = 0;
    for upto in 0..=2 {
        let tr = kronecker_transcript(&k, upto);
        let end = tr.end().clone();
        for (x, s) in end.expanded() {
            let l = ok(lift_object(&c, &x, s, &tr))?;
            ensure!(l.shift == 0, "module summand {:?} lifted to a shifted object", x.dims());
            ensure!(ok(is_isomorphic(&c.push_down(&l.total), &x))?, "push-down of the lift of {:?} differs", x.dims());
            ensure!(ok(is_indecomposable(&l.total))?, "lift of {:?} decomposes", x.dims());
            ensure!(trivial_stabiliser(&c, &l.total), "lift of {:?} has a nontrivial stabiliser", x.dims());
            lifted += 1;
        }
    }
    ensure!(start.elapsed() < Duration::from_secs(30), "took {:?}", start.elapsed());
    Ok(format!("{lifted} summands lifted along P1+P2 -> P1+(2,3) -> (2,3)+(3,4)"))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let k = kronecker();
    let c = kronecker_z2();
    let tr = kronecker_transcript(&k, 1);
    let t = tr.end().underlying_module();
    ensure!(ok(is_tilting_module(&t))?, "T is not tilting");
    let lifts = ok(lift_transcript(&c, &tr))?;
    let ec = ok(induced_end_cover(&c, &t, &lifts))?;
    let failed: Vec<&String> = ec.checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| n).collect();
    ensure!(failed.is_empty(), "failed checks {failed:?}");
    // independent checks on the covering of End(T)
    let qc = ec.cover.quiver_covering();
    let m = qc.group.order();
    ensure!(qc.total.num_vertices() == m * qc.base.num_vertices(), "vertex count");
    ensure!(ec.cover.total().dim() == m * ec.end_algebra.dim(), "total dimension");
    for g in 1..m {
        ensure!((0..qc.total.num_vertices()).all(|v| qc.vertex_action[g][v] != v), "action has a fixed vertex");
    }
    ensure!(connected(qc.total.num_vertices(), &quiver_edges(&qc.total)), "total quiver is disconnected");
    // coresolutions 0 -> P -> T' -> T'' -> 0 of both projectives over the base
    let sub = ok(AddSubcat::of_module(&t))?;
    for v in 0..k.num_vertices() {
        let p = Rep::projective(&k, v);
        let co = ok(coresolution(&p, &sub))?.ok_or(format!("P{} has no coresolution", v + 1))?;
        ensure!(co.u.is_injective(), "P{}: first map not injective", v + 1);
        let mid = co.u.target.clone();
        let d = |x: &Rep| x.dims().iter().sum::<usize>();
        ensure!(d(&mid) == d(&p) + d(&co.cokernel), "P{}: not exact", v + 1);
        for piece in ok(decompose(&co.cokernel))?.summands.iter().chain(ok(decompose(&mid))?.summands.iter()) {
            ensure!(
                ok(decompose(&t))?.summands.iter().any(|s| is_isomorphic(s, piece).unwrap()),
                "P{}: term outside add T",
                v + 1
            );
        }
    }
    ensure!(start.elapsed() < Duration::from_secs(30), "took {:?}", start.elapsed());
    Ok(format!("{} checks passed; End(T) of dimension {}", ec.checks.len(), ec.end_algebra.dim()))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let k = kronecker();
    let arrow = |a: usize| Path { source: 0, arrows: vec![a] };
    let mut autos = Vec::new();
    for (x, y) in [(2, 1), (1, 3), (-1, 1), (2, -5)] {
        autos.push(ok(Automorphism::scaling(&k, &[q(x), q(y)]))?);
    }
    // a -> a + b, b -> b
    autos.push(ok(Automorphism::new(&k, vec![vec![(q(1), arrow(0)), (q(1), arrow(1))], vec![(q(1), arrow(1))]]))?);
    // a <-> b
    autos.push(ok(Automorphism::new(&k, vec![vec![(q(1), arrow(1))], vec![(q(1), arrow(0))]]))?);
    let mut tested = 0;
    for upto in 0..=2 {
        let t = kronecker_transcript(&k, upto).end().clone();
        for psi in &autos {
            ensure!(ok(check_h3(&k, psi, &t))?, "H3 fails for {t}");
            // preprojective modules are determined by their dimension vector
            for s in t.summands() {
                let tw = twist(&s.rep, psi);
                ensure!(tw.dims() == s.rep.dims() && ok(is_indecomposable(&tw))?, "twist of {:?}", s.rep.dims());
                tested += 1;
            }
        }
    }
    ensure!(start.elapsed() < Duration::from_secs(30), "took {:?}", start.elapsed());
    Ok(format!("{} automorphisms, {tested} summand checks", autos.len()))
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let squids: Vec<BoundQuiverAlgebra> =
        vec![squid(2, &[1, 1], &[]).unwrap(), squid(3, &[1, 1, 1], &[q(1)]).unwrap(), squid(3, &[2, 1, 1], &[q(1)]).unwrap()];
    let mut quivers = vec![named::kronecker()];
    quivers.extend(squids.iter().map(|s| s.quiver().clone()));
    let mut balls = 0;
    for qv in &quivers {
        for radius in 1..=4 {
            let t = ok(universal_cover_truncated(qv, 0, radius))?;
            ensure!(t.is_tree(), "radius {radius}: not a tree");
            let n = t.total.num_vertices();
            ensure!(tree_oracle(n, &quiver_edges(&t.total)), "radius {radius}: oracle says not a tree");
            balls += 1;
        }
    }
    let groups = [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::parse_spec("Z2 x Z2").unwrap()];
    let mut covers = 0;
    for qv in &quivers {
        for g in &groups {
            let na = qv.num_arrows();
            // every labelling for the Kronecker quiver, a few for the squids
            let labellings: Vec<Vec<usize>> = if na <= 2 {
                (0..g.order().pow(na as u32)).map(|c| (0..na).map(|i| c / g.order().pow(i as u32) % g.order()).collect()).collect()
            } else {
                (0..g.order()).map(|e| (0..na).map(|i| if i == 0 { e } else { (i * e) % g.order() }).collect()).collect()
            };
            for lab in labellings {
                let w: BTreeMap<String, usize> = (0..na).map(|i| (qv.arrow(i).name.clone(), lab[i])).collect();
                let qc = ok(finite_cover_from_monodromy(qv, g, &w))?;
                ensure!(is_galois_quiver_covering(&qc), "cover of {:?} not Galois", lab);
                ensure!(qc.total.num_vertices() == g.order() * qv.num_vertices(), "vertex count");
                ensure!(qc.total.num_arrows() == g.order() * qv.num_arrows(), "arrow count");
                covers += 1;
            }
        }
    }
    ensure!(start.elapsed() < Duration::from_secs(10), "took {:?}", start.elapsed());
    Ok(format!("{balls} truncated universal covers, {covers} finite covers"))
}

fn euler_suite() -> Result<usize, String> {
    let mut pairs = 0;
    for qv in [named::linear_a(2), named::linear_a(3), named::kronecker()] {
        let a = path_algebra(&qv);
        let inds = ok(enumerate_indecomposables(&a, 4, EnumerationMode::Sample))?.reps;
        for m in &inds {
            for n in &inds {
                let h = ok(hom_dim(m, n))? as i64;
                let e = ok(ext1_dim(m, n))? as i64;
                ensure!(h - e == euler(&qv, m.dims(), n.dims()), "Euler form fails on {:?}, {:?}", m.dims(), n.dims());
                ensure!(h as usize == hom_oracle(m, n), "Hom disagrees with the oracle on {:?}, {:?}", m.dims(), n.dims());
                pairs += 1;
            }
        }
    }
    Ok(pairs)
}

fn round_trip_suite() -> Result<usize, String> {
    let a = path_algebra(&named::linear_a(3));
    let inds: Vec<Rep> = (0..3).flat_map(|lo| (lo..3).map(move |hi| (lo, hi))).map(|(lo, hi)| interval(&a, lo, hi)).collect();
    let mut cases = 0;
    for i in 0..inds.len() {
        for j in i..inds.len() {
            let parts = vec![inds[i].clone(), inds[j].clone(), inds[i].clone()];
            let sum = Rep::direct_sum(&a, &parts);
            // scramble with a unipotent base change at every vertex
            let b: Vec<Matrix> = sum
                .dims()
                .iter()
                .map(|&d| Matrix::from_entries(d, d, (0..d).flat_map(|r| (r..d).map(move |s| (r, s, q(if r == s { 1 } else { (r + 2 * s) as i64 }))))))
                .collect();
            let (scrambled, iso) = ok(sum.base_change(&b))?;
            ensure!(iso.is_iso(), "base change is not an isomorphism");
            let d = ok(decompose(&scrambled))?;
            ensure!(d.summands.len() == 3, "{} summands", d.summands.len());
            let mut used = [false; 3];
            for s in &d.summands {
                let k = (0..3).find(|&k| !used[k] && is_isomorphic(&parts[k], s).unwrap()).ok_or("unmatched summand")?;
                used[k] = true;
            }
            ensure!(ok(is_isomorphic(&scrambled, &sum))?, "scrambled sum is not isomorphic");
            cases += 1;
        }
    }
    Ok(cases)
}

fn straighten_suite() -> Result<usize, String> {
    let k = kronecker();
    let c = kronecker_z2();
    let (p1, p2) = (Rep::projective(c.total(), 0), Rep::projective(c.total(), 2));
    let (fp1, fp2) = (c.push_down(&p1), c.push_down(&p2));
    let g = 1 - c.group().identity();
    let deg = |x: &Rep, y: &Rep, h: usize| -> Vec<RepMorphism> {
        let ty = c.translate(h, y);
        hom_basis(x, &ty)
            .unwrap()
            .iter()
            .map(|f| {
                c.push_down_morphism(f)
                    .then(&c.push_down_translate_iso(h, y))
                    .with_source(&c.push_down(x))
                    .with_target(&c.push_down(y))
            })
            .collect()
    };
    let h0 = deg(&p2, &p1, c.group().identity())[0].clone();
    let h1 = deg(&p2, &p1, g)[0].clone();
    let mut cases = 0;
    // left columns P2 -> P1 ⊕ P1 with mixed entries
    for (x, y, z, w) in [(1, 1, 0, 1), (2, -1, 1, 1), (1, 3, 1, 0), (1, 1, 2, 3)] {
        let e1 = h0.lin_comb(&q(x), &h1, &q(y));
        let e2 = h0.lin_comb(&q(z), &h1, &q(w));
        let sum = Rep::direct_sum(&k, &[fp1.clone(), fp1.clone()]);
        let u = RepMorphism::column(&fp2, &sum, &[e1, e2]);
        let s = ok(straighten(&c, Side::Left, &u, &p2, &[p1.clone(), p1.clone()]))?;
        ensure!(s.theta.is_iso(), "theta is not invertible");
        let before = ok(cone(&DMorphism::from_module_morphism(&u)))?;
        let after = ok(cone(&DMorphism::from_module_morphism(&s.u)))?;
        ensure!(ok(before.is_isomorphic(&after))?, "left straightening changed the cone");
        let up = s.lifted(&c, Side::Left, &p2, &[p1.clone(), p1.clone()]);
        ensure!(ok(is_isomorphic(&c.push_down(&up.target), &u.target))?, "lifted column is not over u");
        cases += 1;
    }
    // right rows P2 ⊕ P2 -> P1
    for (x, y, z, w) in [(1, 1, 0, 1), (1, -2, 3, 1)] {
        let e1 = h0.lin_comb(&q(x), &h1, &q(y));
        let e2 = h0.lin_comb(&q(z), &h1, &q(w));
        let sum = Rep::direct_sum(&k, &[fp2.clone(), fp2.clone()]);
        let u = RepMorphism::row(&sum, &fp1, &[e1, e2]);
        let s = ok(straighten(&c, Side::Right, &u, &p1, &[p2.clone(), p2.clone()]))?;
        let before = ok(cone(&DMorphism::from_module_morphism(&u)))?;
        let after = ok(cone(&DMorphism::from_module_morphism(&s.u)))?;
        ensure!(ok(before.is_isomorphic(&after))?, "right straightening changed the cone");
        cases += 1;
    }
    Ok(cases)
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let pairs = euler_suite()?;
    let trips = round_trip_suite()?;
    let straightened = straighten_suite()?;
    ensure!(start.elapsed() < Duration::from_secs(120), "took {:?}", start.elapsed());
    Ok(format!("{pairs} Euler pairs, {trips} round trips, {straightened} straightened columns"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("squid HH^1 values", criterion_1),
        ("tree criterion", criterion_2),
        ("tilting graph", criterion_3),
        ("reduction algorithm", criterion_4),
        ("covering property", criterion_5),
        ("lifting and stabilisers", criterion_6),
        ("induced End covering", criterion_7),
        ("H3 for automorphisms", criterion_8),
        ("quiver covers", criterion_9),
        ("property suite", criterion_10),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let id = format!("{}", i + 1);
        if !filter.is_empty() && !filter.iter().any(|x| *x == id || name.contains(x.as_str())) {
            continue;
        }
        let start = Instant::now();
        let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
