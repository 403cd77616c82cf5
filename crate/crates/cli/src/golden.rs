//! The built-in m = 4 example: `v₀` and the expected first two iterates.

use chainrep::scalar::int;
use chainrep::setfn::table_order;
use chainrep::{Scalar, SetFunction, SubsetRef};

use crate::document::parse_set_function;

pub const TABLE_V0: &str = include_str!("../fixtures/table-v0.json");

/// Rows in table order (cardinality, then lexicographic).
pub const EXPECTED: [[i64; 16]; 3] = [
    [0, 7, 13, 20, 19, 17, 24, 30, 28, 34, 41, 31, 36, 42, 43, 44],
    [0, 11, 15, 22, 23, 17, 24, 30, 28, 34, 41, 31, 36, 42, 43, 44],
    [0, 11, 15, 22, 23, 18, 25, 30, 29, 34, 41, 31, 36, 42, 43, 44],
];

/// Cell changed by the self-test: `v₂({1,2})`.
pub const SELF_TEST_CELL: (usize, usize) = (2, 5);

pub fn v0() -> SetFunction {
    parse_set_function(TABLE_V0).expect("embedded fixture parses")
}

pub fn columns() -> Vec<SubsetRef> {
    table_order(4)
}

pub fn expected(self_test: bool) -> Vec<Vec<Scalar>> {
    let mut rows: Vec<Vec<Scalar>> = EXPECTED.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
    if self_test {
        let (row, col) = SELF_TEST_CELL;
        rows[row][col] += int(1);
    }
    rows
}
