from ratgauge.cli import main

main()
