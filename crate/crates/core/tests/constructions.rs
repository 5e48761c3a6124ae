use greedyconv::matrix::ColumnSieve;
use greedyconv::GreedyTable;

/// Straight from the definition: keep explicit parts, and give `n` to the
/// part with smallest leader that can take it as its next term.
fn naive_heights(d: usize, n_max: u64) -> Vec<usize> {
    let mut parts: Vec<(u64, usize)> = Vec::new();
    let mut height = vec![0; n_max as usize + 1];
    for n in 1..=n_max {
        let slot = parts
            .iter_mut()
            .find(|(m, size)| *size < d && n == (*size as u64 + 1) * *m);
        match slot {
            Some((_, size)) => {
                *size += 1;
                height[n as usize] = *size;
            }
            None => {
                parts.push((n, 1));
                height[n as usize] = 1;
            }
        }
    }
    height
}

#[test]
fn greedy_table_matches_definition() {
    for d in 1..=8 {
        let t = GreedyTable::build(d, 3000).unwrap();
        let want = naive_heights(d, 3000);
        for n in 1..=3000u64 {
            assert_eq!(t.height(n).unwrap(), want[n as usize], "d={d} n={n}");
        }
    }
}

#[test]
fn column_sieve_matches_greedy_table() {
    for d in 2..=8 {
        let n = 5000u64;
        let sieve = ColumnSieve::build(d, n).unwrap();
        let t = GreedyTable::build(d, n).unwrap();
        for (leader, height) in sieve.assignments() {
            let e = leader * height as u64;
            if e <= n {
                assert_eq!(t.height(e).unwrap(), height, "d={d} n={e}");
            }
        }
    }
}

#[test]
fn column_sieve_nonzero_columns_are_primitives() {
    let sieve = ColumnSieve::build(4, 2000).unwrap();
    let t = GreedyTable::build(4, 8000).unwrap();
    let leaders: Vec<u64> = sieve.nonzero_columns().map(|c| c[0]).collect();
    let prims: Vec<u64> = t.primitives(None).take_while(|&m| m <= 2000).collect();
    assert_eq!(leaders, prims);
}
