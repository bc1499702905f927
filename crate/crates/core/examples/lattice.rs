//! Meets, joins and complements in the lattice of simple elements.

use periodic_braids::{Result, Side, SimpleElement};

fn main() -> Result<()> {
    let n = 8;
    let a = SimpleElement::from_cycles(n, &[&[5, 3, 1][..], &[8, 7]])?;
    let b = SimpleElement::from_cycles(n, &[&[6, 5, 4][..], &[2, 1]])?;

    println!("a = {a}, b = {b}");
    println!("left meet   {}", a.meet_left(&b)?);
    println!("left join   {}", a.join_left(&b)?);
    println!("right meet  {}", a.meet_right(&b)?);
    println!("right join  {}", a.join_right(&b)?);
    println!("a* = {}   *a = {}", a.right_complement(), a.left_complement());
    println!("a \\ (a v b) = {}", a.complement_in(&b, Side::Right)?);

    let (x, y) = a.left_weight_pair(&b)?;
    println!("left-weighted form of a.b: {x} . {y}");
    println!("cycles of a: {:?}", a.cycles().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    Ok(())
}
