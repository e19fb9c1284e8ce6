//! Tables of marks and arithmetic in the Burnside ring through ghost coordinates.

use std::sync::Arc;

use equisep::burnside::{table_of_marks, BurnsideElement};
use equisep::group_core::make_group;
use equisep::gset::GSetType;

fn main() -> equisep::Result<()> {
    for spec in ["S3", "A4"] {
        let g = Arc::new(make_group(spec)?);
        println!("{spec}:\n{}", table_of_marks(&g).to_text());
    }

    let s3 = Arc::new(make_group("S3")?);
    let tom = table_of_marks(&s3);
    // S3 acting on three letters is S3/C2
    let letters = BurnsideElement::from_type(&GSetType::from_multiplicities([(1, 1)]), &tom);
    let square = letters.mul(&letters, &tom);
    println!(
        "[S3/C2]^2 in the orbit basis e, C2, C3, S3: {:?}",
        square.coefficients
    );
    Ok(())
}
