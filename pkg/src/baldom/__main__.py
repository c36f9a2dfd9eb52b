from baldom.cli import main

main()
