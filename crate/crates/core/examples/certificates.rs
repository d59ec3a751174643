//! Constructive independent sets with replayable certificates.

use subcubic::constructive::{construct_c1, construct_griggs, construct_main};
use subcubic::families::{gen_b, gen_n, prism};
use subcubic::graph::parse_graph6;
use subcubic::{q, GraphOptions};

fn main() {
    let comb = gen_b(5).unwrap().graph;
    let cert = construct_main(&comb).unwrap();
    println!("main on comb: set {:?}, bound {}, rules {:?}", cert.independent_set, cert.bound_value,
        cert.trace.iter().map(|s| s.rule.as_str()).collect::<Vec<_>>());
    assert_eq!(cert.replay(), cert.independent_set);

    let c7 = gen_n(3).unwrap().graph;
    let cert = construct_griggs(&c7).unwrap();
    println!("griggs on C7: set {:?}, bound {}", cert.independent_set, cert.bound_value);

    let cert = construct_c1(&prism(), q(5, 7)).unwrap();
    println!("c1 = 5/7 on prism: set {:?}, bound {}", cert.independent_set, cert.bound_value);

    let diamond = parse_graph6("E}GW", &GraphOptions::default()).unwrap();
    let cert = construct_c1(&diamond, q(5, 7)).unwrap();
    println!("c1 = 5/7 on the diamond graph: size {}, fallbacks {}", cert.size, cert.fallbacks_used);
    println!("{}", serde_json::to_string_pretty(&cert).unwrap());
}
