//! For `K` spanning a real subspace `E` of `ℂ²`, `dim D_C K = 2(l − a)` where
//! `l = dim E` and `a = dim_ℂ(E ∩ JE)`.

use dcbody::verify::dimension_table;

fn main() {
    println!(" l  a  2(l-a)  dim D_C K");
    for row in dimension_table(3).unwrap() {
        println!("{:2} {:2} {:7} {:10}", row.l, row.a, row.expected, row.observed);
    }
}
