# Command-line surface: quiver file format, reports and dispatch
