use equidouble::acceptance;

fn main() {
    let results = acceptance::all();
    for c in &results {
        println!("{}", c.line());
    }
    let failed: Vec<usize> = results.iter().filter(|c| !c.pass()).map(|c| c.id).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
