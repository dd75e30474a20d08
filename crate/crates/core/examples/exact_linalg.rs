//! Characteristic and minimal polynomials, kernels and solving over Q.

use borel_lie::linalg::{rat, Matrix};

fn main() -> borel_lie::Result<()> {
    let a = Matrix::from_ints(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 3]]);
    let chi = a.char_poly()?;
    let mu = a.min_poly()?;
    println!("A =\n{a}");
    println!("char poly: {chi}");
    println!("min poly:  {mu}");
    println!("chi(A) = 0: {}", chi.eval_matrix(&a)?.is_zero());
    println!("squarefree min poly (diagonalizable): {}", mu.is_squarefree()?);

    let n = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
    let ker = n.kernel();
    println!("rank {} with kernel basis {:?}", n.rank(), ker.iter().map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>());

    let b = vec![rat(1, 2), rat(0, 1), rat(-1, 1)];
    match a.solve(&b)? {
        Some(x) => println!("A x = b has solution {:?}", x.iter().map(ToString::to_string).collect::<Vec<_>>()),
        None => println!("A x = b is inconsistent"),
    }
    Ok(())
}
