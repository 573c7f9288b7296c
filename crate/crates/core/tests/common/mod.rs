// Test-only reference implementations, independent of the library's
// generation, ranking and canonicalization paths.

#![allow(dead_code)]

use icdfa::{CanonicalString, Dfa};

/// Every string in `[0, n)^(kn)` that passes `validate`, in lexicographic
/// order. Generate-and-test, so only usable for tiny shapes.
pub fn sorted_valid_strings(n: usize, k: usize) -> Vec<CanonicalString> {
    let len = n * k;
    let mut cells = vec![0; len];
    let mut out = Vec::new();
    loop {
        let s = CanonicalString::new(n, k, cells.clone()).unwrap();
        if s.is_valid() {
            out.push(s);
        }
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cells[i] += 1;
            if cells[i] < n {
                break;
            }
            cells[i] = 0;
        }
    }
}

fn reachable_states(d: &Dfa) -> Vec<usize> {
    let s = d.structure();
    let mut seen = vec![false; s.n()];
    let mut stack = vec![s.initial()];
    seen[s.initial()] = true;
    while let Some(q) = stack.pop() {
        for a in 0..s.k() {
            let t = s.target(q, a);
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    (0..s.n()).filter(|&q| seen[q]).collect()
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

/// Isomorphism of reachable parts by trying every bijection.
pub fn brute_isomorphic(a: &Dfa, b: &Dfa) -> bool {
    let (sa, sb) = (a.structure(), b.structure());
    if sa.k() != sb.k() {
        return false;
    }
    let ra = reachable_states(a);
    let rb = reachable_states(b);
    if ra.len() != rb.len() {
        return false;
    }
    'perm: for image in permutations(&rb) {
        let f = |q: usize| image[ra.iter().position(|&x| x == q).unwrap()];
        if f(sa.initial()) != sb.initial() {
            continue;
        }
        for &q in &ra {
            if a.is_final(q) != b.is_final(f(q)) {
                continue 'perm;
            }
            for s in 0..sa.k() {
                if f(sa.target(q, s)) != sb.target(f(q), s) {
                    continue 'perm;
                }
            }
        }
        return true;
    }
    false
}
