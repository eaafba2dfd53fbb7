use igscript_service::{app, Config};

#[tokio::main]
async fn main() {
    let config = match Config::from_env() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("igscript-service: {e}");
            std::process::exit(2);
        }
    };
    let port: u16 = match std::env::var("PORT").map(|p| p.trim().parse()) {
        Err(_) => 8080,
        Ok(Ok(p)) => p,
        Ok(Err(_)) => {
            eprintln!("igscript-service: PORT is not a valid port number");
            std::process::exit(2);
        }
    };
    let listener = match tokio::net::TcpListener::bind(("0.0.0.0", port)).await {
        Ok(l) => l,
        Err(e) => {
            eprintln!("igscript-service: cannot bind port {port}: {e}");
            std::process::exit(2);
        }
    };
    eprintln!("igscript-service listening on port {port}");
    let shutdown = async {
        let _ = tokio::signal::ctrl_c().await;
    };
    if let Err(e) = axum::serve(listener, app(&config)).with_graceful_shutdown(shutdown).await {
        eprintln!("igscript-service: {e}");
        std::process::exit(1);
    }
}
