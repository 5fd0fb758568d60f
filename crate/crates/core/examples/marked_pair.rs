//! Draws the marked pair of Young diagrams of a datum, its common diagram
//! with the hook union starred, and the resulting dimension.

use grass_orbits::young::{common_diagram, HookDirection, OrbitDatum};

fn main() {
    let datum = OrbitDatum::new(9, 4, 3, vec![3, 5, 6, 9], vec![2, 5], vec![(7, 9)]).expect("valid datum");
    let mp = datum.marked_pair().expect("valid datum");
    println!("{datum}\n");
    println!("{mp}");

    let common = common_diagram(&mp).expect("dots lie in the common diagram");
    println!("common diagram {:?} (# dot, * hook box):", common.shape());
    print!("{}", common.render());
    println!(
        "#Y1 + #Y2 - #Ycom + #H = {} + {} - {} + {} = {}",
        mp.first.box_count(),
        mp.second.box_count(),
        common.box_count(),
        common.hook_union_cells(HookDirection::Inward).len(),
        datum.dimension().unwrap()
    );
}
