# Moment-angle toolkit command-line front end
