mod common;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

#[test]
fn dump_failing_instance() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    for i in 0..6 {
        let g = common::random_connected_delta2(&mut rng, 60);
        let n = g.n();
        let r = dynamo_core::constructions::construct_t2_dynamo(&g).unwrap();
        println!(
            "instance {i}: n={n} m={} size={} target={}",
            g.m(),
            r.size,
            n.div_ceil(2)
        );
        if r.size > n.div_ceil(2) {
            println!("graph:\n{}", dynamo_core::graph::io::serialize_graph(&g));
        }
    }
}
