use fibpow_cli::{render_text, run, Format};

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let result = run(&argv);
    match result.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&result.doc).unwrap()),
        Format::Text => print!("{}", render_text(&result.doc)),
    }
    std::process::exit(result.status.exit_code());
}
