//! Enumeration of loops as reduced Latin squares.

use crate::algebra::Elem;
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Largest order [`reduced_latin_squares`] will enumerate.
pub const MAX_LOOP_ORDER: usize = 6;

/// Every reduced Latin square of order `n` (row 0 and column 0 are the
/// identity), in lexicographic order of their row-major entries.
///
/// Reduced squares are exactly the multiplication tables of loops on
/// `{0..n-1}` with unit 0; isomorphic loops appear several times.
pub fn reduced_latin_squares(n: usize, budget: Budget) -> Result<Vec<Vec<Vec<Elem>>>> {
    if n == 0 {
        return Err(Error::Shape {
            table: "mul",
            expected: 1,
            got: 0,
        });
    }
    if n > MAX_LOOP_ORDER {
        // (n-1)!^(n-1) bounds the number of row choices.
        let fact: u128 = (1..n as u128).product();
        let estimate = (1..n).fold(1u128, |acc, _| acc.saturating_mul(fact));
        return Err(Error::BudgetExceeded {
            context: "loop enumeration beyond order 6",
            arity: n,
            estimate,
            budget: budget.limit(),
        });
    }
    let mut grid: Vec<Elem> = vec![0; n * n];
    let mut row_used = vec![0u32; n];
    let mut col_used = vec![0u32; n];
    for i in 0..n {
        grid[i] = i as Elem;
        grid[i * n] = i as Elem;
        row_used[i] |= 1 << i;
        col_used[i] |= 1 << i;
    }
    row_used[0] = (1 << n) - 1;
    col_used[0] = (1 << n) - 1;
    let mut out = Vec::new();
    fill(n, 1, 1, &mut grid, &mut row_used, &mut col_used, &mut out);
    Ok(out)
}

fn fill(
    n: usize,
    r: usize,
    c: usize,
    grid: &mut [Elem],
    row_used: &mut [u32],
    col_used: &mut [u32],
    out: &mut Vec<Vec<Vec<Elem>>>,
) {
    if r == n {
        out.push(grid.chunks(n).map(|row| row.to_vec()).collect());
        return;
    }
    let (nr, nc) = if c + 1 == n { (r + 1, 1) } else { (r, c + 1) };
    let free = !(row_used[r] | col_used[c]) & ((1u32 << n) - 1);
    let mut bits = free;
    while bits != 0 {
        let v = bits.trailing_zeros();
        bits &= bits - 1;
        grid[r * n + c] = v;
        row_used[r] |= 1 << v;
        col_used[c] |= 1 << v;
        fill(n, nr, nc, grid, row_used, col_used, out);
        row_used[r] &= !(1 << v);
        col_used[c] &= !(1 << v);
    }
}
