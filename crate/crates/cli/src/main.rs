mod args;
mod commands;
mod error;
mod render;

use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, ColorChoice};
use crate::render::Style;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let color = match cli.color {
        ColorChoice::Always => true,
        ColorChoice::Never => false,
        ColorChoice::Auto => std::io::stdout().is_terminal() && std::env::var_os("NO_COLOR").is_none(),
    };
    let style = Style { color };
    match commands::run(&cli, style) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let text = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("serializable") + "\n"
            } else {
                out.text
            };
            // a closed pipe is not worth an error message
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(err) => {
            if cli.json {
                let body = serde_json::json!({ "error": err.to_string(), "kind": err.kind() });
                println!("{}", serde_json::to_string_pretty(&body).expect("serializable"));
            } else {
                eprintln!("zplane: {err}");
            }
            ExitCode::from(err.exit_code())
        }
    }
}
